"""JSON file reading with errors that name the file and location."""
import json

from .errors import ValidationError


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def with_path(path, loader, data):
    """Run ``loader(data)`` and prefix any validation error with ``path``."""
    try:
        return loader(data)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None
    except (TypeError, AttributeError) as exc:
        raise ValidationError(f"{path}: malformed content ({exc})") from None
