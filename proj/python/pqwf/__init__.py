"""Power-quality disturbance toolkit: waveform synthesis, db4 wavelet
features and KNN / SVM / random forest classification."""

try:
    from ._pqwf import *  # noqa: F401,F403  (installed layout)
    from ._pqwf import __doc__ as _doc
except ImportError:  # build-tree layout: extension next to the package dir
    from _pqwf import *  # noqa: F401,F403
    from _pqwf import __doc__ as _doc

__doc__ = _doc
