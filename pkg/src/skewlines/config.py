from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SKEWLINES_",
        case_sensitive=False,
    )

    # App
    env: str = "development"
    log_level: str = "INFO"

    # Randomness
    seed: int = 20230515
    random_height: int = 10_000

    # Caps
    orbit_cap: int = 20_000
    closure_cap: int = 2_000
    char0_closure_threshold: int = 120
    redraw_cap: int = 50
    field_scan_cap: int = 1_000_000
    equivalence_search_cap: int = 200_000

    # Geproci
    geproci_trials: int = 3
    auto_extend: bool = False

    # Output
    schema_version: str = "1"


def get_settings() -> Settings:
    return Settings()
