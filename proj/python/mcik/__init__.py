"""MCIK-OFDM link simulator and BER bound evaluator."""

from ._core import (
    AveragedBound,
    BerPoint,
    ConfigError,
    CorrectDetectionModel,
    IndexMapping,
    QamBerConstants,
    StoppingRule,
    SystemConfig,
    TrialStats,
    __version__,
    average_ber_bound,
    ber_bound,
    bits_per_block,
    me0_cluster,
    me1_cluster,
    pep_conditional,
    q_function,
    qam_awgn_ber,
    qam_ber_constants,
    read_csv,
    run_point,
    run_sweep,
    validate_config,
    write_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
