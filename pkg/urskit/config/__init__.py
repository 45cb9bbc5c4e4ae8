from .loader import RunConfig, get_config, load_config

__all__ = ["RunConfig", "get_config", "load_config"]
