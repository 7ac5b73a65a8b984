"""
Brandt Providers Package
"""
from core.brandt_providers.modpoly import ModularPolynomialProvider
from core.brandt_providers.velu2 import Velu2Provider

__all__ = ["ModularPolynomialProvider", "Velu2Provider"]
