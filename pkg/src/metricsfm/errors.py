"""Exception hierarchy shared by all metricsfm modules.

Every error carries a stable ``code`` (the class name) so the CLI can emit
machine-readable error records without string matching.
"""

from __future__ import annotations


class MetricSfmError(Exception):
    """Base class for all package errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# --- sparse model parsing ---------------------------------------------------

class MalformedLine(MetricSfmError):
    """A model file line has the wrong field count or a non-numeric field."""


class UnsupportedCameraModel(MetricSfmError):
    """Camera model other than SIMPLE_PINHOLE/PINHOLE (distortion present)."""


class OddObservationTriples(MetricSfmError):
    """Image observation line length not divisible by 3."""


class OddTrackPairs(MetricSfmError):
    """3D point track list has an odd number of tokens."""


class InvalidQuaternion(MetricSfmError):
    """Quaternion norm deviates from 1 beyond tolerance, or is near zero."""


class ModelIntegrityError(MetricSfmError):
    """Referential integrity violation across cameras/images/points."""


# --- depth map I/O ----------------------------------------------------------

class UnsupportedDepthFormat(MetricSfmError):
    """File is neither a single-channel float map nor a 16-bit gray PNG."""


class DimensionMismatch(MetricSfmError):
    """Depth map dimensions differ from what the caller requires."""


class ValueOutOfRange(MetricSfmError):
    """Depth value not representable in the requested on-disk format."""


# --- scale recovery ---------------------------------------------------------

class ImageNotRegistered(MetricSfmError):
    """Requested view is not registered in the sparse model."""


class InsufficientSamples(MetricSfmError):
    """Too few common valid pixels to estimate a trustworthy scale."""


class NonPositiveRatio(MetricSfmError):
    """A metric/unscaled depth ratio sample is zero or negative."""


# --- reprojection -----------------------------------------------------------

class NonMetricInput(MetricSfmError):
    """Depth map unit does not match what the operation requires."""


# --- evaluation -------------------------------------------------------------

class EmptyOverlap(MetricSfmError):
    """Prediction and ground truth share no valid pixels."""


class NonPositiveGroundTruth(MetricSfmError):
    """Ground-truth depth contains non-positive values among valid pixels."""


# --- manifests --------------------------------------------------------------

class OverlappingSplits(MetricSfmError):
    """A sequence is assigned to both train and validation."""


class ExcludedDataset(MetricSfmError):
    """Sequence belongs to a dataset that is excluded outright."""


class ManifestError(MetricSfmError):
    """Manifest inputs are inconsistent (unknown sequence, bad split file)."""


# --- synthetic scenes -------------------------------------------------------

class DegenerateSpec(MetricSfmError):
    """Synthetic scene has no usable geometry (camera not facing surface)."""


# --- pipeline ---------------------------------------------------------------

class AnchorNotRegistered(MetricSfmError):
    """The anchor image name is absent from the sparse model."""
