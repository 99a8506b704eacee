from SturmLiouville.Families.BaseFamily import BaseFamily
from SturmLiouville.Families.LegendreFamily import LegendreFamily
from SturmLiouville.Families.LaguerreFamily import LaguerreFamily
from SturmLiouville.Families.HermiteFamily import HermiteFamily
from SturmLiouville.Families.ConfluentFamily import ConfluentFamily
from SturmLiouville.Families.ChebyshevFamily import ChebyshevFamily
from SturmLiouville.Families.JacobiFamily import JacobiFamily

FAMILIES = {
    "legendre": LegendreFamily,
    "laguerre": LaguerreFamily,
    "hermite": HermiteFamily,
    "confluent": ConfluentFamily,
    "chebyshev": ChebyshevFamily,
    "jacobi": JacobiFamily,
}


def family_by_name(name: str, **params) -> BaseFamily:
    """ Instantiates a family from its name, e.g. family_by_name("jacobi", alpha=-1, beta=0)."""
    if name.lower() not in FAMILIES:
        raise ValueError(f"Unknown family: '{name}'. Should be one of {list(FAMILIES)}")
    return FAMILIES[name.lower()](**params)
