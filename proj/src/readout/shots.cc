// Copyright 2026 The readoutkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readoutkit/readout/shots.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "readoutkit/errors.h"
#include "readoutkit/readout/heterodyne.h"
#include "readoutkit/units.h"
#include "readoutkit/util/csv.h"
#include "readoutkit/util/parallel.h"
#include "readoutkit/util/rng.h"

namespace readoutkit::readout {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Channel {
    const DispersiveQubit *qubit;
    double omega_d;
    EnvelopeStep step[2];
};

double waiting_time(double rate, std::mt19937_64 &rng) {
    if (rate <= 0) {
        return kInf;
    }
    return std::exponential_distribution<double>(rate)(rng);
}

/// Evolves one resonator through `envelope` starting at time `t0`, switching state at jumps.
/// Samples alpha at the start of every interval into `out` when given.
void evolve(const Channel &ch, std::span<const std::complex<double>> envelope, size_t n, double dt, double t0,
            int &state, std::complex<double> &alpha, std::mt19937_64 &rng, std::vector<JumpEvent> *jumps,
            std::complex<double> *out) {
    const DispersiveQubit &q = *ch.qubit;
    double next = t0 + waiting_time(q.rate_out_of(state), rng);
    for (size_t k = 0; k < n; ++k) {
        if (out) {
            out[k] = alpha;
        }
        std::complex<double> eps = envelope.empty() ? std::complex<double>{} : envelope[k];
        double start = t0 + static_cast<double>(k) * dt;
        double end = start + dt;
        if (next >= end) {
            alpha = ch.step[state](alpha, eps);
            continue;
        }
        double t = start;
        while (next < end) {
            alpha = EnvelopeStep(q.detuning(state, ch.omega_d), q.kappa, next - t)(alpha, eps);
            t = next;
            state ^= 1;
            if (jumps) {
                jumps->push_back({t, state});
            }
            next = t + waiting_time(q.rate_out_of(state), rng);
        }
        alpha = EnvelopeStep(q.detuning(state, ch.omega_d), q.kappa, end - t)(alpha, eps);
    }
}

/// Free evolution over an arbitrary duration: exact, split at jumps.
void evolve_free(const Channel &ch, double duration, int &state, std::complex<double> &alpha, std::mt19937_64 &rng) {
    const DispersiveQubit &q = *ch.qubit;
    double t = 0;
    double next = waiting_time(q.rate_out_of(state), rng);
    while (next < duration) {
        alpha = EnvelopeStep(q.detuning(state, ch.omega_d), q.kappa, next - t)(alpha, {});
        t = next;
        state ^= 1;
        next = t + waiting_time(q.rate_out_of(state), rng);
    }
    alpha = EnvelopeStep(q.detuning(state, ch.omega_d), q.kappa, duration - t)(alpha, {});
}

}  // namespace

int prepared_label(Preparation preparation, int fixed_state, size_t shot, size_t tone) {
    switch (preparation) {
        case Preparation::alternate:
            return static_cast<int>(shot % 2);
        case Preparation::independent:
            return static_cast<int>((util::mix64(shot) >> (tone % 64)) & 1);
        case Preparation::fixed:
            break;
    }
    return fixed_state;
}

size_t ShotSet::bins() const {
    if (series_bin == 0) {
        return 0;
    }
    return (samples + series_bin - 1) / series_bin;
}

std::vector<std::complex<double>> mean_amplitude(const DispersiveQubit &qubit, const PulseProgram &program,
                                                 size_t tone, int state) {
    auto env = program.envelope(tone);
    return resonator_response(qubit, env, kTwoPi * program.tones.at(tone).f_hz, program.dt, state);
}

ShotSet simulate_shots(const std::vector<DispersiveQubit> &qubits, const PulseProgram &program,
                       const ShotOptions &options) {
    program.validate();
    if (options.n_shots == 0) {
        throw std::invalid_argument("simulate: n_shots must be at least 1");
    }
    if (qubits.size() != program.tones.size()) {
        throw std::invalid_argument("simulate: need exactly one qubit per tone");
    }
    check_efficiency(options.eta);
    if (!(options.thermal_population >= 0 && options.thermal_population <= 1)) {
        throw std::invalid_argument("simulate: thermal population must lie in [0, 1]");
    }
    if (!(options.t_gap >= 0) || !std::isfinite(options.t_gap)) {
        throw std::invalid_argument("simulate: t_gap must be non-negative");
    }
    const double dt = program.dt;
    const size_t n = program.samples();
    const size_t tones = qubits.size();

    std::vector<Channel> channels;
    std::vector<std::vector<std::complex<double>>> envelopes;
    for (size_t m = 0; m < tones; ++m) {
        const auto &q = qubits[m];
        q.validate();
        double wd = kTwoPi * program.tones[m].f_hz;
        check_step(q, wd, dt);
        if (dt * std::max(q.rate_out_of(0), q.rate_out_of(1)) > kMaxJumpProbability) {
            throw StepSizeError("simulate: dt * transition rate exceeds " + std::to_string(kMaxJumpProbability));
        }
        channels.push_back({&q, wd,
                            {EnvelopeStep(q.detuning(0, wd), q.kappa, dt), EnvelopeStep(q.detuning(1, wd), q.kappa, dt)}});
        envelopes.push_back(program.envelope(m));
    }

    ShotSet set;
    set.dt = dt;
    set.samples = n;
    set.series_bin = options.series_bin;
    for (size_t m = 0; m < tones; ++m) {
        set.offsets.push_back(program.offset(m));
    }

    std::vector<Window> windows = options.windows;
    if (windows.empty()) {
        windows.push_back(boxcar_window(n, dt));
    }
    if (windows.size() != 1 && windows.size() != tones) {
        throw std::invalid_argument("simulate: need one window or one per tone");
    }
    size_t longest = 0;
    for (const auto &w : windows) {
        if (w.size() > n) {
            throw std::invalid_argument("simulate: window longer than the record");
        }
        double sum = 0;
        for (auto x : w) {
            sum += std::abs(x);
        }
        if (std::abs(sum * dt - 1) > 1e-6) {
            throw std::invalid_argument("simulate: window must satisfy sum |w| dt = 1");
        }
        longest = std::max(longest, w.size());
    }
    set.warnings = collision_warnings(set.offsets, static_cast<double>(longest) * dt);

    // Demodulation phasors exp(+i Delta_m t_k) dt and per-tone measurement gains.
    std::vector<std::vector<std::complex<double>>> demod(tones, std::vector<std::complex<double>>(n));
    std::vector<double> gain(tones);
    for (size_t m = 0; m < tones; ++m) {
        for (size_t k = 0; k < n; ++k) {
            demod[m][k] = std::polar(dt, set.offsets[m] * static_cast<double>(k) * dt);
        }
        gain[m] = std::sqrt(options.eta * qubits[m].kappa);
    }
    const size_t bins = set.bins();

    set.shots.resize(options.n_shots);
    util::parallel_for(options.n_shots, [&](size_t shot) {
        std::mt19937_64 rng = util::stream_rng(options.seed, shot);
        std::bernoulli_distribution thermal(options.thermal_population);
        ShotRecord &rec = set.shots[shot];
        rec.shot = shot;
        rec.prepared.resize(tones);
        rec.initial.resize(tones);
        rec.jumps.assign(tones, {});
        rec.iq.assign(tones, {});

        std::vector<int> state(tones);
        std::vector<std::complex<double>> alpha(tones);
        std::vector<std::complex<double>> z(n);
        std::vector<std::complex<double>> trace(n);

        auto record = [&](std::vector<std::vector<JumpEvent>> *jumps) {
            std::fill(z.begin(), z.end(), std::complex<double>{});
            for (size_t m = 0; m < tones; ++m) {
                evolve(channels[m], envelopes[m], n, dt, 0, state[m], alpha[m], rng, jumps ? &(*jumps)[m] : nullptr,
                       trace.data());
                for (size_t k = 0; k < n; ++k) {
                    // Tone m appears at offset Delta_m in the composite record.
                    z[k] += gain[m] * trace[k] * std::conj(demod[m][k]) / dt;
                }
            }
            if (!options.noiseless) {
                add_heterodyne_noise(z, dt, rng);
            }
        };
        auto integrate = [&](size_t m) {
            const Window &w = windows.size() == 1 ? windows[0] : windows[m];
            std::complex<double> acc;
            for (size_t k = 0; k < w.size(); ++k) {
                acc += w[k] * z[k] * demod[m][k];
            }
            return acc;
        };

        for (size_t m = 0; m < tones; ++m) {
            rec.prepared[m] = prepared_label(options.preparation, qubits[m].initial_state, shot, m);
            state[m] = options.thermal_population > 0 && thermal(rng) ? 1 : 0;
        }
        bool staged = options.herald || options.t_gap > 0 || options.thermal_population > 0;
        if (!staged) {
            state = rec.prepared;
        }
        if (options.herald) {
            record(nullptr);
            rec.herald_iq.resize(tones);
            for (size_t m = 0; m < tones; ++m) {
                rec.herald_iq[m] = integrate(m);
            }
        }
        if (staged) {
            for (size_t m = 0; m < tones; ++m) {
                if (options.t_gap > 0) {
                    evolve_free(channels[m], options.t_gap, state[m], alpha[m], rng);
                }
                // Preparation pulse: flip when |1> is requested.
                state[m] ^= rec.prepared[m];
            }
        }
        rec.initial = state;
        record(&rec.jumps);
        for (size_t m = 0; m < tones; ++m) {
            rec.iq[m] = integrate(m);
        }
        if (bins > 0) {
            rec.series.assign(tones, std::vector<std::complex<double>>(bins));
            for (size_t m = 0; m < tones; ++m) {
                for (size_t k = 0; k < n; ++k) {
                    rec.series[m][k / options.series_bin] += z[k] * demod[m][k];
                }
            }
        }
    });
    return set;
}

std::string shots_csv(const ShotSet &set) {
    using util::format_number;
    std::string out = "shot,tone,i,q,n_jumps,first_jump_ns\n";
    for (const auto &r : set.shots) {
        for (size_t m = 0; m < r.iq.size(); ++m) {
            const auto &j = r.jumps[m];
            out += util::csv_line({std::to_string(r.shot), std::to_string(m), format_number(r.iq[m].real()),
                                   format_number(r.iq[m].imag()), std::to_string(j.size()),
                                   j.empty() ? std::string() : format_number(j.front().time * 1e9)});
        }
    }
    return out;
}

std::string series_csv(const ShotSet &set) {
    using util::format_number;
    std::string out = "shot,tone,t_ns,re,im\n";
    for (const auto &r : set.shots) {
        for (size_t m = 0; m < r.series.size(); ++m) {
            for (size_t b = 0; b < r.series[m].size(); ++b) {
                double t_end = std::min(set.record_length(), set.bin_dt() * static_cast<double>(b + 1));
                out += util::csv_line({std::to_string(r.shot), std::to_string(m), format_number(t_end * 1e9),
                                       format_number(r.series[m][b].real()), format_number(r.series[m][b].imag())});
            }
        }
    }
    return out;
}

}  // namespace readoutkit::readout
