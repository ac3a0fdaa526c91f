"""
Main API router: combines the domain routers. Mounted under /api/v1 by
surreals.main.
"""
from fastapi import APIRouter

from surreals.api.routers import separation as separation_router
from surreals.api.routers import surreals as surreals_router

router = APIRouter()

router.include_router(surreals_router.router, tags=["surreals"])
router.include_router(separation_router.router, tags=["separation"])
