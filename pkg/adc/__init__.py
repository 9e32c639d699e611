from utilities.config_utils import load_json_resource

__version__ = load_json_resource("info.json", __file__)["version"]
