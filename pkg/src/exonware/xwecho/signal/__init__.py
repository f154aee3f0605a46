"""
Signal chain for xwecho: spectra, GCC weightings, noise templates,
prefiltering, interference removal and peak extraction.
"""

from .spectral import (
    SampledSignal,
    CrossPsd,
    Weighting,
    GccSequence,
    GccFrames,
    taper,
    lag_axis,
    to_two_sided,
    estimate_cross_psd,
    make_weighting,
    gcc,
    gcc_frames,
)
from .noise import (
    frame_count,
    spectrogram,
    suppress_transients,
    NoiseTemplate,
    NoiseTemplateBank,
    estimate_noise_template,
    align_noise_template,
)
from .filters import design_highpass, prefilter_highpass, remove_adcp
from .peaks import TdoaPeak, extract_tdoa_peaks, peaks_to_frame, peaks_from_frame
from .audio import read_audio, write_wave, write_raw
__all__ = [
    'SampledSignal',
    'CrossPsd',
    'Weighting',
    'GccSequence',
    'GccFrames',
    'taper',
    'lag_axis',
    'to_two_sided',
    'estimate_cross_psd',
    'make_weighting',
    'gcc',
    'gcc_frames',
    'frame_count',
    'spectrogram',
    'suppress_transients',
    'NoiseTemplate',
    'NoiseTemplateBank',
    'estimate_noise_template',
    'align_noise_template',
    'design_highpass',
    'prefilter_highpass',
    'remove_adcp',
    'TdoaPeak',
    'extract_tdoa_peaks',
    'peaks_to_frame',
    'peaks_from_frame',
    'read_audio',
    'write_wave',
    'write_raw',
]
