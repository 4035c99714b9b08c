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

#include "readoutkit/readout/pulse.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "readoutkit/units.h"

namespace readoutkit::readout {

namespace {

size_t segment_samples(double duration, double dt) {
    double n = duration / dt;
    double r = std::round(n);
    if (!(r >= 1) || std::abs(n - r) > 1e-6 * std::max(1.0, r)) {
        throw std::invalid_argument("pulse: segment duration " + std::to_string(duration) +
                                    " s is not a positive multiple of dt");
    }
    return static_cast<size_t>(r);
}

}  // namespace

double Tone::duration() const {
    double t = 0;
    for (const auto &s : segments) {
        t += s.duration;
    }
    return t;
}

void PulseProgram::validate() const {
    if (!(dt > 0) || !std::isfinite(dt)) {
        throw std::invalid_argument("pulse: dt must be positive");
    }
    if (tones.empty()) {
        throw std::invalid_argument("pulse: at least one tone is required");
    }
    for (size_t i = 0; i < tones.size(); ++i) {
        if (!(tones[i].f_hz > 0) || !std::isfinite(tones[i].f_hz)) {
            throw std::invalid_argument("pulse: tone frequency must be positive");
        }
        if (tones[i].segments.empty()) {
            throw std::invalid_argument("pulse: tone without segments");
        }
        for (const auto &s : tones[i].segments) {
            segment_samples(s.duration, dt);
            if (!std::isfinite(s.amplitude.real()) || !std::isfinite(s.amplitude.imag())) {
                throw std::invalid_argument("pulse: non-finite amplitude");
            }
        }
        for (size_t j = 0; j < i; ++j) {
            if (tones[i].f_hz == tones[j].f_hz) {
                throw std::invalid_argument("pulse: tone frequencies must be distinct");
            }
        }
    }
    if (lo_hz && !(*lo_hz > 0)) {
        throw std::invalid_argument("pulse: lo_hz must be positive");
    }
}

size_t PulseProgram::samples() const {
    size_t n = 0;
    for (const auto &t : tones) {
        size_t k = 0;
        for (const auto &s : t.segments) {
            k += segment_samples(s.duration, dt);
        }
        n = std::max(n, k);
    }
    return n;
}

double PulseProgram::duration() const {
    return static_cast<double>(samples()) * dt;
}

double PulseProgram::reference_hz() const {
    if (lo_hz) {
        return *lo_hz;
    }
    double sum = 0;
    for (const auto &t : tones) {
        sum += t.f_hz;
    }
    return tones.empty() ? 0 : sum / static_cast<double>(tones.size());
}

double PulseProgram::offset(size_t tone) const {
    return kTwoPi * (tones.at(tone).f_hz - reference_hz());
}

std::vector<std::complex<double>> PulseProgram::envelope(size_t tone) const {
    std::vector<std::complex<double>> out(samples());
    size_t k = 0;
    for (const auto &s : tones.at(tone).segments) {
        size_t n = segment_samples(s.duration, dt);
        for (size_t i = 0; i < n; ++i) {
            out[k++] = s.amplitude;
        }
    }
    return out;
}

Tone ring_up_sustain(double f_hz, double t_ring, std::complex<double> a_ring, double t_sustain,
                     std::complex<double> a_sustain) {
    Tone t;
    t.f_hz = f_hz;
    if (t_ring > 0) {
        t.segments.push_back({t_ring, a_ring});
    }
    t.segments.push_back({t_sustain, a_sustain});
    return t;
}

namespace {

nlohmann::json amplitude_json(std::complex<double> a) {
    return nlohmann::json::array({a.real(), a.imag()});
}

std::complex<double> parse_amplitude(const nlohmann::json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0};
    }
    if (j.is_array() && j.size() == 2) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw std::invalid_argument("pulse: amplitude must be a number or [re, im]");
}

}  // namespace

nlohmann::json to_json(const PulseProgram &program) {
    nlohmann::json j;
    j["dt"] = program.dt;
    if (program.lo_hz) {
        j["lo_hz"] = *program.lo_hz;
    }
    j["tones"] = nlohmann::json::array();
    for (const auto &t : program.tones) {
        nlohmann::json tj;
        tj["f_hz"] = t.f_hz;
        tj["segments"] = nlohmann::json::array();
        for (const auto &s : t.segments) {
            tj["segments"].push_back({{"duration", s.duration}, {"amplitude", amplitude_json(s.amplitude)}});
        }
        j["tones"].push_back(tj);
    }
    return j;
}

PulseProgram pulse_from_json(const nlohmann::json &j) {
    PulseProgram p;
    try {
        p.dt = j.value("dt", p.dt);
        if (j.contains("lo_hz")) {
            p.lo_hz = j.at("lo_hz").get<double>();
        }
        for (const auto &tj : j.at("tones")) {
            Tone t;
            t.f_hz = tj.at("f_hz").get<double>();
            for (const auto &sj : tj.at("segments")) {
                t.segments.push_back({sj.at("duration").get<double>(), parse_amplitude(sj.at("amplitude"))});
            }
            p.tones.push_back(std::move(t));
        }
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("pulse: ") + ex.what());
    }
    p.validate();
    return p;
}

}  // namespace readoutkit::readout
