#!/usr/bin/env python3
"""
Local HTTP server for the qgain rank service.

Usage:
    python local_server.py [--port 8000]

Serves the /v1 endpoints at http://localhost:8000
"""
import logging
import sys

import click
import uvicorn

from qgain.config import Config


@click.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--reload", is_flag=True, help="Restart on code changes")
def serve(host: str, port: int, reload: bool):
    logging.basicConfig(level=Config.LOG_LEVEL, format=Config.LOG_FORMAT)
    logging.info(f"Python version: {sys.version.split()[0]}")
    click.echo(f"Starting qgain server at http://{host}:{port}{Config.API_PREFIX}")
    click.echo("Press Ctrl+C to stop the server")
    uvicorn.run("qgain.index:app", host=host, port=port, reload=reload, log_level=Config.LOG_LEVEL.lower())


if __name__ == '__main__':
    serve()
