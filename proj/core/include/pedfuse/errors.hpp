#pragma once

#include <stdexcept>
#include <string>

namespace pedfuse {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// K[R1 R2 t] is numerically singular; the camera admits no ground homography.
struct SingularCalibration : Error {
  using Error::Error;
};

/// Image point maps to the line at infinity of the ground plane.
struct PointAtInfinity : Error {
  using Error::Error;
};

/// Cosine distance is undefined for (near-)zero vectors.
struct ZeroVector : Error {
  using Error::Error;
};

/// Descriptor vectors of unequal dimension.
struct LengthMismatch : Error {
  using Error::Error;
};

/// Descriptor gating requested but some point carries no descriptor.
struct MissingDescriptor : Error {
  using Error::Error;
};

/// Heatmap grid over the area of interest has no cells.
struct EmptyGrid : Error {
  using Error::Error;
};

/// Metrics requested over a dataset with zero ground-truth annotations.
struct ZeroGroundTruth : Error {
  using Error::Error;
};

/// Synthetic scene could not satisfy the pedestrian spacing constraint.
struct PlacementFailure : Error {
  using Error::Error;
};

/// Input file violates the documented schema.
struct SchemaError : Error {
  using Error::Error;
};

/// Calibration record violates a structural invariant (K, R, distortion).
struct CalibrationError : Error {
  using Error::Error;
};

}  // namespace pedfuse
