"""Configuration module for the Bell monogamy toolkit."""
from bellmono.config.settings import Config, config

__all__ = ['Config', 'config']
