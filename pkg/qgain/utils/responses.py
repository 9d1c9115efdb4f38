from typing import Any, Dict, Optional

from fastapi.responses import JSONResponse


def success_response(data: Any = None, status_code: int = 200) -> JSONResponse:
    """
    Standardized success envelope

    Args:
        data: JSON-serializable payload
        status_code: HTTP status code

    Returns:
        JSONResponse with {"success": true, "data": ...}
    """
    return JSONResponse(content={"success": True, "data": {} if data is None else data}, status_code=status_code)


def error_response(message: str, status_code: int = 400, details: Optional[Any] = None) -> JSONResponse:
    """Standardized error envelope: {"success": false, "error": ..., "details"?: ...}"""
    content: Dict[str, Any] = {"success": False, "error": message}
    if details:
        content["details"] = details
    return JSONResponse(content=content, status_code=status_code)
