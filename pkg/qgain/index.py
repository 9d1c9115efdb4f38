from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from .config import Config
from .errors import register_exception_handlers
from .routes.health import router as health_router
from .routes.rank import router as rank_router

app = FastAPI(title="qgain")

app.add_middleware(
    CORSMiddleware,
    allow_origins=Config.get_cors_origins(),
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

register_exception_handlers(app)

api_prefix = Config.API_PREFIX

app.include_router(health_router, prefix=api_prefix)
app.include_router(rank_router, prefix=api_prefix)
