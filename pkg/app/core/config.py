from functools import lru_cache
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="RICH_SS_",
        extra="ignore",
    )

    app_name: str = "Richardson Semistability Service"
    environment: str = "dev"
    log_level: str = "INFO"
    api_key: str | None = None

    # Oracle knobs
    budget: int = 100_000  # max Weyl group size enumerated
    seed: int = 20240611
    k_max: int = 6  # longest chain the semistability oracle searches
    samples: int = 200
    max_n: int = 5
    workers: int = 0  # verify processes; 0 means one per CPU

    # Largest rank the API classifies or checks
    max_rank: int = 12


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
