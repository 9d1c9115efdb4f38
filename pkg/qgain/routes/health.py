"""
Health check endpoints
"""
from fastapi import APIRouter
from fastapi.responses import JSONResponse

from .. import __version__
from ..config import Config

router = APIRouter()


@router.get("/health")
def health():
    return JSONResponse(content={"status": "ok", "version": __version__, "cayley_bound": Config.CAYLEY_BOUND})

