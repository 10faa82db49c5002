import os
import logging
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

logger = logging.getLogger(__name__)

# Hard ceilings; the defaults in Settings stay below them.
S_CEILING = 10
I_CEILING = 9
PT_CEILING = 8


class Settings(BaseModel):
    workers: int = Field(1, ge=1, description="Worker processes for distribution tables")
    log_level: str = Field("WARNING", description="Root log level for the CLI")
    db_path: str = Field("./data/permtab_reports.db", description="Report archive location")
    max_n_s: int = Field(8, ge=1, le=S_CEILING)
    max_n_i: int = Field(7, ge=1, le=I_CEILING)
    max_n_pt: int = Field(7, ge=1, le=PT_CEILING)


@lru_cache()
def get_settings() -> Settings:
    settings = Settings(
        workers=int(os.getenv("PERMTAB_WORKERS", "1")),
        log_level=os.getenv("PERMTAB_LOG_LEVEL", "WARNING").upper(),
        db_path=os.getenv("PERMTAB_DB_PATH", "./data/permtab_reports.db"),
        max_n_s=int(os.getenv("PERMTAB_MAX_N_S", "8")),
        max_n_i=int(os.getenv("PERMTAB_MAX_N_I", "7")),
        max_n_pt=int(os.getenv("PERMTAB_MAX_N_PT", "7")),
    )
    logger.debug(f"Loaded settings: {settings}")
    return settings
