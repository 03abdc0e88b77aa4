"""
Pasos de cálculo de los comandos de lglab.
"""
from src.infrastructure.command_steps.milnor_step import MilnorStep
from src.infrastructure.command_steps.koszul_step import KoszulStep
from src.infrastructure.command_steps.fibers_step import FibersStep
from src.infrastructure.command_steps.freeness_step import FreenessStep
from src.infrastructure.command_steps.brieskorn_step import BrieskornStep
from src.infrastructure.command_steps.pairing_step import PairingStep
from src.infrastructure.command_steps.spectrum_step import SpectrumStep
from src.infrastructure.command_steps.predict_step import PredictStep
from src.infrastructure.command_steps.consistency_step import ConsistencyStep

__all__ = [
    "MilnorStep",
    "KoszulStep",
    "FibersStep",
    "FreenessStep",
    "BrieskornStep",
    "PairingStep",
    "SpectrumStep",
    "PredictStep",
    "ConsistencyStep",
]
