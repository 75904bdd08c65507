#pragma once

#include "dirac/spectral.hpp"

namespace dirac {

/// Unit-norm sample of a low-passed state on the coarse lattice, plus the
/// norm removed by renormalization.
struct DiscretizedState {
    LatticeField field;
    double renorm_factor;
};

/// Ideal low-pass: zeroes every Fourier mode with any |k_j| at or beyond the
/// Nyquist edge of the coarse grid with target_n points (the -N/2 edge mode,
/// which the coarse FFT layout represents, is kept). Returns a field on the
/// same fine grid.
LatticeField low_pass(const LatticeField& a, int target_n);

/// Low-pass, sample every r-th site (realized as the Fourier-block
/// restriction) and renormalize to unit norm. Records the removed norm.
DiscretizedState discretize(const LatticeField& a, int target_n);

/// Shannon-style inverse of discretize: undo the renormalization, zero-pad
/// the Fourier block to the fine grid with fine_r times the points, and
/// transform back. The output is band-limited on the fine grid.
LatticeField reconstruct(const DiscretizedState& s, int fine_r);

/// Band-limited spectral resampling onto a grid with target_n points and the
/// same period. Downsampling drops out-of-band content (it is a projection);
/// upsampling is exact.
LatticeField regrid(const LatticeField& a, int target_n);

}  // namespace dirac
