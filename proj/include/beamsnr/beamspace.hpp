// SPDX-License-Identifier: Apache-2.0
#ifndef BEAMSNR_BEAMSPACE_HPP
#define BEAMSNR_BEAMSPACE_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace beamsnr {

using CVec = std::vector<std::complex<double>>;

/// Element-wise powers |v_m|^2 of a beamspace vector, sorted ascending,
/// together with the permutation that produced the order:
/// sorted_power[i] == |v[permutation[i]]|^2. Ties are broken by the
/// original beam index so the permutation is reproducible.
struct BeamspacePower {
    std::vector<double> sorted_power;
    std::vector<std::size_t> permutation;
};

double norm_sq(const CVec& v);
bool all_finite(const CVec& v);

/// Unitary DFT (antenna -> beamspace). Power is preserved: the 1/sqrt(M)
/// scaling makes ||Fy||^2 == ||y||^2. Radix-2 FFT when M is a power of
/// two, direct evaluation otherwise. Rejects empty or non-finite input.
CVec to_beamspace(const CVec& y);

/// Inverse unitary DFT (beamspace -> antenna).
CVec from_beamspace(const CVec& y_b);

BeamspacePower sorted_power(const CVec& y_b);

/// Direct O(M^2) unitary DFT. Test/benchmark oracle for to_beamspace;
/// shares no code with the fast path.
CVec naive_dft(const CVec& y);
CVec naive_idft(const CVec& y_b);

} // namespace beamsnr

#endif // BEAMSNR_BEAMSPACE_HPP
