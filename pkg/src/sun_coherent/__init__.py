"""sun-coherent : états cohérents généralisés de SU(n) pour n et N arbitraires."""

__version__ = "0.1.0"
