"""
Configuration settings for the graph discord toolkit
"""

from typing import List, Union
from pydantic_settings import BaseSettings
from pydantic import field_validator


class Settings(BaseSettings):
    """Application settings"""
    
    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: str = "logs/graph_discord.log"
    LOG_TO_FILE: bool = True
    
    # Report defaults
    DEFAULT_SIGNS: Union[str, List[str]] = "l,q"
    DEFAULT_FORMAT: str = "json"
    DEFAULT_SEED: int = 7
    DEFAULT_TRIALS: int = 1000
    
    # Numerical tolerances (floating side of the oracle only)
    PSD_TOLERANCE: float = 1e-9
    ENTROPY_TOLERANCE: float = 1e-9
    
    # Verification limits
    EXHAUSTIVE_ORDER_LIMIT: int = 3
    SAMPLED_ORDER_LIMIT: int = 10
    
    # Labeling search
    CLASSIFY_EXHAUSTIVE_MAX_VERTICES: int = 8
    
    # Worker pool for classify / enumerate (1 = run inline)
    MAX_WORKERS: int = 1
    
    @field_validator("DEFAULT_SIGNS", mode="before")
    @classmethod
    def parse_default_signs(cls, v):
        """Parse sign selection string into list"""
        if isinstance(v, str):
            return [sign.strip() for sign in v.split(",") if sign.strip()]
        return v
    
    @field_validator("MAX_WORKERS")
    @classmethod
    def check_max_workers(cls, v):
        """Worker count must be positive"""
        if v < 1:
            raise ValueError("MAX_WORKERS must be at least 1")
        return v
    
    class Config:
        env_file = ".env"
        case_sensitive = True


# Create settings instance
settings = Settings()
