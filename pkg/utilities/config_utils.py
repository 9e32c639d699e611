import json
import os


def load_json_resource(file_name: str, anchor: str) -> dict:
    """
    Load a JSON resource that lives next to a module.

    Args:
    ----
        file_name (str): The name of the JSON file, e.g. ``strings.json``.
        anchor (str): The ``__file__`` of the module the resource sits beside.

    Returns:
    -------
        dict: The decoded document.

    """
    caller_dir = os.path.dirname(os.path.abspath(anchor))
    resource_path = os.path.join(caller_dir, file_name)

    with open(resource_path, encoding="utf-8") as f:
        return json.load(f)


def read_env_int(name: str, default: int, minimum: int | None = None) -> int:
    """Read an integer environment variable, rejecting junk with a message naming the variable."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        not_an_integer = f"{name} must be an integer, got {raw!r}."
        raise ValueError(not_an_integer) from None
    if minimum is not None and value < minimum:
        too_small = f"{name} must be at least {minimum}, got {value}."
        raise ValueError(too_small)
    return value
