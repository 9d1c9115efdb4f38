import logging

from fastapi import Request, status
from fastapi.exceptions import HTTPException, RequestValidationError
from pydantic import ValidationError as PydanticValidationError
from starlette.exceptions import HTTPException as StarletteHTTPException

from .utils.exceptions import (
    DisconnectedGraphError,
    FamilySpecError,
    GraphElementNotFoundError,
    GraphFileError,
    GraphStructureError,
    HypothesisViolationError,
    NonPureQuaternionError,
    NonUnitGainError,
    QuaternionParseError,
    ReductionPreconditionError,
)
from .utils.responses import error_response

_DOMAIN_ERRORS = (
    QuaternionParseError,
    NonUnitGainError,
    NonPureQuaternionError,
    GraphStructureError,
    GraphElementNotFoundError,
    DisconnectedGraphError,
    ReductionPreconditionError,
    HypothesisViolationError,
    FamilySpecError,
)


def register_exception_handlers(app):
    @app.exception_handler(PydanticValidationError)
    @app.exception_handler(RequestValidationError)
    async def validation_exception_handler(request: Request, exc):
        logging.warning(f"Validation error: {exc}")
        return error_response("Validation failed", status.HTTP_422_UNPROCESSABLE_ENTITY, details=str(exc))

    @app.exception_handler(GraphFileError)
    async def graph_document_exception_handler(request: Request, exc: GraphFileError):
        logging.warning(f"Graph document rejected: {exc}")
        details = {"location": exc.location} if exc.location else None
        return error_response(str(exc), status.HTTP_422_UNPROCESSABLE_ENTITY, details=details)

    for error_class in _DOMAIN_ERRORS:
        @app.exception_handler(error_class)
        async def domain_exception_handler(request: Request, exc):
            logging.warning(f"{type(exc).__name__}: {exc}")
            return error_response(str(exc), status.HTTP_400_BAD_REQUEST)

    @app.exception_handler(HTTPException)
    @app.exception_handler(StarletteHTTPException)
    async def http_exception_handler(request: Request, exc):
        logging.warning(f"HTTP error: {getattr(exc, 'detail', exc)}")
        return error_response(
            getattr(exc, "detail", str(exc)),
            getattr(exc, "status_code", status.HTTP_400_BAD_REQUEST),
        )

    @app.exception_handler(Exception)
    async def generic_exception_handler(request: Request, exc):
        logging.exception(f"Unexpected error: {exc}")
        return error_response("Internal server error", status.HTTP_500_INTERNAL_SERVER_ERROR)
