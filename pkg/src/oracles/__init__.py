"""
Oráculos independientes: Kouchnirenko, Betti de hipersuperficies,
predicciones de rango y proxy de mansedumbre.
"""
from src.oracles.newton import NewtonData, kouchnirenko_mu, newton_data, newton_volumes, faces_at_infinity
from src.oracles.tameness import TamenessVerdict, tameness_proxy
from src.oracles.hypersurface import (
    euler_characteristic_chern,
    euler_characteristic_recursive,
    hypersurface_betti,
    primitive_middle_betti_from_milnor,
)
from src.oracles.predictions import RankPrediction, predicted_rank_tame, predicted_ranks_hypersurface

__all__ = [
    "NewtonData",
    "kouchnirenko_mu",
    "newton_data",
    "newton_volumes",
    "faces_at_infinity",
    "TamenessVerdict",
    "tameness_proxy",
    "euler_characteristic_chern",
    "euler_characteristic_recursive",
    "hypersurface_betti",
    "primitive_middle_betti_from_milnor",
    "RankPrediction",
    "predicted_rank_tame",
    "predicted_ranks_hypersurface",
]
