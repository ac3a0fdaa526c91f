"""
HTTP service.

Run with:

    uvicorn surreals.main:app --host 0.0.0.0 --port 8000

or `python -m surreals.main`, which reads SURREALS_HOST and SURREALS_PORT.

SURREALS_LOCAL_MODE=true opens CORS to every origin; SURREALS_LOG_LEVEL
sets the level of the surreals loggers.
"""
import logging
import os

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from surreals import __version__
from surreals.api.routes import router as api_router

logger = logging.getLogger(__name__)

LOG_LEVEL = os.getenv("SURREALS_LOG_LEVEL", "WARNING").upper()
# In local mode, allow all origins
LOCAL_MODE = os.getenv("SURREALS_LOCAL_MODE", "false").lower() == "true"
HOST = os.getenv("SURREALS_HOST", "127.0.0.1")
PORT = int(os.getenv("SURREALS_PORT", "8000"))

logging.getLogger("surreals").setLevel(LOG_LEVEL)

app = FastAPI(
    title="Surreals API",
    description="Bounds and separators of sets of surreal numbers in sign-sequence form.",
    version=__version__,
)

if LOCAL_MODE:
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=False,
        allow_methods=["*"],
        allow_headers=["*"],
    )
else:
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["http://localhost:5173", "http://127.0.0.1:5173"],
        allow_credentials=False,
        allow_methods=["*"],
        allow_headers=["*"],
    )
    logger.debug("CORS restricted to local development origins")

app.include_router(api_router, prefix="/api/v1")


@app.get("/health")
async def health_check():
    return {"status": "ok"}


def serve() -> None:
    import uvicorn

    uvicorn.run(app, host=HOST, port=PORT, log_level=LOG_LEVEL.lower())


if __name__ == "__main__":
    serve()
