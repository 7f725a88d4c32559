#include "zcfast/transform.hpp"

#include <algorithm>

#include "zcfast/gauss.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zcfast {

TwiddleTable::TwiddleTable(const Prime& p) : table_(static_cast<std::size_t>(p.value())) {
    for (std::int64_t j = 0; j < p.value(); ++j) table_[static_cast<std::size_t>(j)] = turn_phasor(-j, p);
}

std::int64_t dft_frequency_shift(const ZcParams& params, std::int64_t iu) {
    const std::int64_t P = params.P.value();
    return mod_reduce(params.P.inverse_of_two() * mod_reduce(iu - 1, P) - params.ts, P);
}

std::int64_t idft_frequency_shift(const ZcParams& params, std::int64_t iu) {
    const std::int64_t P = params.P.value();
    return mod_reduce(params.P.inverse_of_two() * mod_reduce(iu + 1, P) + params.ts, P);
}

std::int64_t conjugate_form_dft_shift(const Prime& p, std::int64_t iu) {
    return mod_reduce(p.inverse_of_two() * mod_reduce(1 - iu, p.value()), p.value());
}

std::int64_t conjugate_form_idft_shift(const Prime& p, std::int64_t iu) {
    return mod_reduce(p.half() * mod_reduce(iu + 1, p.value()), p.value());
}

TransformPlan::TransformPlan(const ZcParams& params, Direction direction)
    : TransformPlan(params, direction, std::make_shared<const TwiddleTable>(params.P)) {}

TransformPlan::TransformPlan(const ZcParams& params, Direction direction,
                             std::shared_ptr<const TwiddleTable> twiddles)
    : params_(params),
      direction_(direction),
      iu_(mod_inverse(params.u, params.P)),
      ell_(legendre(2 * params.u, params.P)),
      fs_(direction == Direction::kDft ? dft_frequency_shift(params, iu_) : idft_frequency_shift(params, iu_)),
      qpo_times4_(quasi_phase_offset4_reduced(params.P, params.u)),
      const_factor_(gauss_phasor(params.P, qpo_times4_)),
      twiddles_(std::move(twiddles)) {
    if (!twiddles_ || twiddles_->size() != static_cast<std::size_t>(params.P.value())) {
        twiddles_ = std::make_shared<const TwiddleTable>(params.P);
    }
}

TransformPlan TransformPlan::with_shifted_frequency(std::int64_t delta) const {
    TransformPlan copy = *this;
    copy.fs_ = mod_reduce(fs_ + delta, params_.P.value());
    return copy;
}

namespace {

// Plain complex product; std::complex's operator* takes the slow
// Annex G path for inf/nan handling, which never applies to unit phasors.
inline Complex mul(const Complex& a, const Complex& b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

template <bool kCount>
void run_serial(const TransformPlan& plan, ComplexSequence& out, OpCounters* counters) {
    const std::int64_t P = plan.params().P.value();
    const std::int64_t iu = plan.inverse_root();
    const Complex c = plan.const_factor();
    const TwiddleTable& w = plan.twiddles();

    std::int64_t freq = plan.frequency_shift();
    std::int64_t phase = 0;
    std::int64_t adds = 0, mods = 0, exps = 0;
    for (std::int64_t k = 0;; ++k) {
        out[static_cast<std::size_t>(k)] = mul(c, w[phase]);
        if constexpr (kCount) ++exps;
        if (k == P - 1) break;
        freq -= iu;
        if (freq < 0) freq += P;
        phase += freq;
        if (phase >= P) phase -= P;
        if constexpr (kCount) {
            adds += 2;
            mods += 2;
        }
    }
    if constexpr (kCount) {
        counters->additions += adds;
        counters->modulo_reductions += mods;
        counters->exp_evaluations += exps;
    }
}

}  // namespace

ComplexSequence execute(const TransformPlan& plan, OpCounters* counters) {
    ComplexSequence out(static_cast<std::size_t>(plan.params().P.value()));
    if (counters) {
        run_serial<true>(plan, out, counters);
    } else {
        run_serial<false>(plan, out, nullptr);
    }
    return out;
}

ComplexSequence execute_parallel(const TransformPlan& plan) {
    const std::int64_t P = plan.params().P.value();
    const std::int64_t iu = plan.inverse_root();
    const std::int64_t fs = plan.frequency_shift();
    const Complex c = plan.const_factor();
    const TwiddleTable& w = plan.twiddles();
    ComplexSequence out(static_cast<std::size_t>(P));

    std::int64_t chunks = 1;
#ifdef _OPENMP
    chunks = std::max<std::int64_t>(1, omp_get_max_threads());
#endif
    const std::int64_t chunk_len = (P + chunks - 1) / chunks;

#pragma omp parallel for schedule(static)
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
        const std::int64_t begin = chunk * chunk_len;
        const std::int64_t end = std::min(P, begin + chunk_len);
        if (begin >= end) continue;

        // accumulator state at bin k: freq = Fs - iu*k, phase = Fs*k - iu*k(k+1)/2
        const Int128 k0 = begin;
        const Int128 tri = (k0 * (k0 + 1) / 2) % P;
        std::int64_t freq = mod_reduce(fs - static_cast<std::int64_t>(Int128{iu} * k0 % P), P);
        std::int64_t phase = static_cast<std::int64_t>(((Int128{fs} * k0 - Int128{iu} * tri) % P + P) % P);

        for (std::int64_t k = begin; k < end; ++k) {
            out[static_cast<std::size_t>(k)] = mul(c, w[phase]);
            freq -= iu;
            if (freq < 0) freq += P;
            phase += freq;
            if (phase >= P) phase -= P;
        }
    }
    return out;
}

ComplexSequence dft_reference(const ZcParams& params) {
    const Prime& p = params.P;
    const std::int64_t P = p.value();
    const std::int64_t iu = mod_inverse(params.u, p);
    const std::int64_t ramp = mod_reduce(conjugate_form_dft_shift(p, iu) + params.ts, P);
    const Complex f0 = gauss_sum_closed(p, params.u).value;

    ComplexSequence out(static_cast<std::size_t>(P));
    for (std::int64_t k = 0; k < P; ++k) {
        out[static_cast<std::size_t>(k)] = zc_sample(p, P - iu, k) * turn_phasor(ramp * k % P, p) * f0;
    }
    return out;
}

ComplexSequence idft_reference(const ZcParams& params) {
    const Prime& p = params.P;
    const std::int64_t P = p.value();
    const std::int64_t iu = mod_inverse(params.u, p);
    const std::int64_t ramp = mod_reduce(conjugate_form_idft_shift(p, iu) - params.ts, P);
    const Complex f0 = gauss_sum_closed(p, params.u).value;

    ComplexSequence out(static_cast<std::size_t>(P));
    for (std::int64_t k = 0; k < P; ++k) {
        out[static_cast<std::size_t>(k)] = std::conj(zc_sample(p, iu, k)) * turn_phasor(ramp * k % P, p) * f0;
    }
    return out;
}

}  // namespace zcfast
