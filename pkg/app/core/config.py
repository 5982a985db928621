"""
Application configuration
"""
from typing import Literal

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    # Application settings
    APP_NAME: str = "DihedralHoms"
    VERSION: str = "1.0.0"
    DEBUG: bool = False
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    # Counting limits
    COUNT_BITS: int = 128
    ENUMERATION_LIMIT: int = 1_000_000
    ORACLE_MAX_N: int = 10_000
    DIVISOR_SCAN_MAX: int = 10 ** 12  # trial division runs up to sqrt of this

    # Grid evaluation
    TABLE_WORKERS: int = 1

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="allow",  # Allow extra fields from .env
    )

    @property
    def count_cap(self) -> int:
        """Exclusive upper bound for any count or intermediate"""
        return 1 << self.COUNT_BITS

    @property
    def log_level(self) -> str:
        return "DEBUG" if self.DEBUG else self.LOG_LEVEL


settings = Settings()
