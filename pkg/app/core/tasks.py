"""
Reparto de trabajo independiente por par (N, p).

Los resultados se devuelven en el orden de entrada sin importar el orden de
terminación.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_ordered(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Aplica fn a cada elemento, en paralelo si workers > 1.

    Args:
        fn: Función pura sobre un elemento
        items: Entradas (p. ej. primos p o pares (N, p))
        workers: Hilos; por defecto settings.WORKERS

    Returns:
        Lista de resultados en el orden de ``items``
    """
    items = list(items)
    workers = workers or settings.WORKERS
    if workers <= 1 or len(items) <= 1:
        results = [fn(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, items))
    logger.debug(f"✅ {len(results)} tarea(s) completada(s) con {workers} hilo(s)")
    return results
