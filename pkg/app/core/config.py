from pathlib import Path
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict

# Directorio de datos incluido en el repositorio (Phi_2, Phi_3 sobre Z)
DEFAULT_DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "modular_polynomials"


class Settings(BaseSettings):
    # Environment
    ENV: str = "production"

    # App Config
    APP_TITLE: str = "brandt-zeta"
    APP_VERSION: str = "1.0.0"
    APP_DESCRIPTION: str = "Grafos de Ramanujan G_N(p), funciones zeta de Ihara y Hasse-Weil"

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Polinomios modulares
    BRANDT_ZETA_DATA: Optional[str] = None
    MODPOLY_GENERATE: bool = True
    MODPOLY_GENERATE_MAX_LEVEL: int = 31
    MODPOLY_CACHE_DIR: Optional[str] = None

    # Enumeración de caminos cerrados
    PATH_ENUMERATION_MAX_LENGTH: int = 12
    PATH_ENUMERATION_MAX_EDGES: int = 40

    # Trabajo en paralelo por par (N, p)
    WORKERS: int = 1

    # Selftest
    SELFTEST_SEED: int = 20240601
    SELFTEST_CORPUS_SIZE: int = 24

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"  # Ignorar variables de env extra
    )

    def data_dir(self, override: Optional[str] = None) -> Path:
        """
        Directorio de polinomios modulares.

        Precedencia: flag --data-dir > BRANDT_ZETA_DATA > directorio del repositorio.
        """
        if override:
            return Path(override)
        if self.BRANDT_ZETA_DATA:
            return Path(self.BRANDT_ZETA_DATA)
        return DEFAULT_DATA_DIR


settings = Settings()
