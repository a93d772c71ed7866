from .sweep_config import GridSection, OutputSection, SweepConfig, SweepSection, WaveSection

__all__ = ["GridSection", "OutputSection", "SweepConfig", "SweepSection", "WaveSection"]
