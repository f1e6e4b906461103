// Copyright 2026 The qcsim Authors
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

#include "qcsim/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcsim/kernels.hpp"

namespace qcsim {

// ---------------------------------------------------------------------------
// Codebook

Codebook Codebook::from_magnitudes(std::span<const double> magnitudes) {
    if (magnitudes.size() > kMaxMagnitudes) {
        throw std::invalid_argument("codebook holds at most 127 magnitudes");
    }
    for (std::size_t k = 0; k < magnitudes.size(); ++k) {
        if (!(magnitudes[k] > 0) || !std::isfinite(magnitudes[k]) || (k > 0 && !(magnitudes[k - 1] < magnitudes[k]))) {
            throw std::invalid_argument("codebook magnitudes must be positive, finite and strictly increasing");
        }
    }
    Codebook book;
    book.values_.reserve(2 * magnitudes.size());
    for (auto it = magnitudes.rbegin(); it != magnitudes.rend(); ++it) {
        book.values_.push_back(-*it);
    }
    for (double m : magnitudes) {
        book.values_.push_back(m);
    }
    for (std::size_t k = 0; k < book.values_.size(); ++k) {
        book.decode_table_[k + 1] = book.values_[k];
    }
    book.insertion_count_ = book.values_.size();
    return book;
}

double Codebook::decode(std::uint8_t code) const {
    if (code > values_.size()) {
        throw CorruptCodeError(
            "code " + std::to_string(code) + " references an unset table slot (table has " +
            std::to_string(values_.size()) + " values)");
    }
    return decode_table_[code];
}

std::optional<std::uint8_t> Codebook::find_exact(double value) const {
    if (value == 0) {
        return std::uint8_t{0};
    }
    auto it = std::lower_bound(values_.begin(), values_.end(), value);
    if (it != values_.end() && *it == value) {
        return static_cast<std::uint8_t>(it - values_.begin() + 1);
    }
    return std::nullopt;
}

std::uint8_t Codebook::encode_nearest(double value) const {
    const std::size_t half = values_.size() / 2;
    const double m = std::abs(value);
    if (half == 0 || m == 0) {
        return 0;
    }
    // Positive half is values_[half .. 2*half); zero sits just below it.
    auto first = values_.begin() + static_cast<std::ptrdiff_t>(half);
    auto it = std::lower_bound(first, values_.end(), m);
    std::size_t j;  // index into values_, or npos for zero
    constexpr std::size_t kZero = std::numeric_limits<std::size_t>::max();
    if (it == values_.end()) {
        j = values_.size() - 1;
    } else if (*it == m) {
        j = static_cast<std::size_t>(it - values_.begin());
    } else {
        double above = *it;
        double below = it == first ? 0.0 : *(it - 1);
        if (m - below <= above - m) {
            j = it == first ? kZero : static_cast<std::size_t>(it - values_.begin() - 1);
        } else {
            j = static_cast<std::size_t>(it - values_.begin());
        }
    }
    if (j == kZero) {
        return 0;
    }
    auto code = static_cast<std::uint8_t>(j + 1);
    return value < 0 ? negate(code) : code;
}

double Codebook::half_gap_at(double value) const {
    const std::size_t half = values_.size() / 2;
    const double m = std::abs(value);
    double lo = 0;
    for (std::size_t j = half; j < values_.size(); ++j) {
        if (values_[j] >= m) {
            return (values_[j] - lo) / 2;
        }
        lo = values_[j];
    }
    return m == lo ? 0 : std::numeric_limits<double>::infinity();
}

double Codebook::max_gap() const {
    double gap = 0, lo = 0;
    for (std::size_t j = values_.size() / 2; j < values_.size(); ++j) {
        gap = std::max(gap, values_[j] - lo);
        lo = values_[j];
    }
    return gap;
}

void Codebook::inherit_history(const Codebook &previous, bool now_saturated) {
    std::size_t fresh = 0;
    for (double v : values_) {
        if (!std::binary_search(previous.values_.begin(), previous.values_.end(), v)) {
            ++fresh;
        }
    }
    insertion_count_ = previous.insertion_count_ + fresh;
    saturated_ = previous.saturated_ || now_saturated;
}

// ---------------------------------------------------------------------------
// Table construction

namespace {

/// Distinct nonzero magnitudes, up to the table capacity.
struct MagnitudeSet {
    std::vector<double> mags;
    bool overflow = false;
    double max = 0;

    void add(double v) {
        v = std::abs(v);
        if (v == 0) {
            return;
        }
        max = std::max(max, v);
        if (overflow) {
            return;
        }
        auto it = std::lower_bound(mags.begin(), mags.end(), v);
        if (it != mags.end() && *it == v) {
            return;
        }
        if (mags.size() == Codebook::kMaxMagnitudes) {
            overflow = true;
            mags.clear();
            return;
        }
        mags.insert(it, v);
    }

    MagnitudeSet &operator+=(const MagnitudeSet &o) {
        max = std::max(max, o.max);
        if (overflow || o.overflow) {
            overflow = true;
            mags.clear();
            return *this;
        }
        std::vector<double> merged;
        merged.reserve(mags.size() + o.mags.size());
        std::set_union(mags.begin(), mags.end(), o.mags.begin(), o.mags.end(), std::back_inserter(merged));
        if (merged.size() > Codebook::kMaxMagnitudes) {
            overflow = true;
            mags.clear();
        } else {
            mags = std::move(merged);
        }
        return *this;
    }
};

/// Per-chunk partials here are large, so reduce over at most ~256 chunks.
std::int64_t coarse_chunk(std::int64_t units) {
    return std::max<std::int64_t>(4096, (units + 255) / 256);
}

/// Above this many real parts, magnitudes are binned instead of sorted.
constexpr std::int64_t kExactFitParts = std::int64_t{1} << 16;
constexpr std::size_t kHistogramBins = 8192;

/// A run of magnitudes in [lo, hi] with their count and sum.
struct Cluster {
    double lo = 0;
    double hi = 0;
    double count = 0;
    double sum = 0;
};

/// Magnitude histogram on [0, max] keeping per-bin extent, count and sum.
struct Histogram {
    std::vector<Cluster> bins;
    double scale = 0;

    explicit Histogram(double max_value = 0)
        : bins(kHistogramBins, Cluster{std::numeric_limits<double>::infinity(), 0, 0, 0}),
          scale(max_value > 0 ? kHistogramBins / max_value : 0) {
    }

    void add(double v) {
        v = std::abs(v);
        if (v == 0) {
            return;
        }
        Cluster &b = bins[std::min<std::size_t>(kHistogramBins - 1, static_cast<std::size_t>(v * scale))];
        b.lo = std::min(b.lo, v);
        b.hi = std::max(b.hi, v);
        b.count += 1;
        b.sum += v;
    }

    Histogram &operator+=(const Histogram &o) {
        for (std::size_t k = 0; k < kHistogramBins; ++k) {
            bins[k].lo = std::min(bins[k].lo, o.bins[k].lo);
            bins[k].hi = std::max(bins[k].hi, o.bins[k].hi);
            bins[k].count += o.bins[k].count;
            bins[k].sum += o.bins[k].sum;
        }
        return *this;
    }
};

/// Every nonzero magnitude, for small states.
struct MagnitudeList {
    std::vector<double> values;
    MagnitudeList &operator+=(const MagnitudeList &o) {
        values.insert(values.end(), o.values.begin(), o.values.end());
        return *this;
    }
};

/// Groups of clusters a single level can serve with error at most `e`,
/// after the clusters that round to zero. Returns the number of levels
/// needed, or `limit + 1` once it exceeds `limit`.
std::size_t levels_needed(const std::vector<Cluster> &clusters, double e, std::size_t limit) {
    std::size_t i = 0, levels = 0;
    while (i < clusters.size() && clusters[i].hi <= e) {
        ++i;
    }
    while (i < clusters.size()) {
        if (++levels > limit) {
            return levels;
        }
        const double reach = clusters[i].lo + 2 * e;
        while (i < clusters.size() && clusters[i].hi <= reach) {
            ++i;
        }
    }
    return levels;
}

/// Table magnitudes minimizing the largest rounding error over the
/// clusters (bisection on the error, greedy cover), each level then moved
/// toward its group's mean as far as that error allows.
std::vector<double> fit_levels(const std::vector<Cluster> &clusters) {
    const std::size_t limit = Codebook::kMaxMagnitudes;
    double lo = 0;
    double hi = clusters.back().hi;
    for (int iteration = 0; iteration < 64; ++iteration) {
        double mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (levels_needed(clusters, mid, limit) <= limit) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double e = hi;

    std::vector<double> levels;
    std::size_t i = 0;
    while (i < clusters.size() && clusters[i].hi <= e) {
        ++i;
    }
    while (i < clusters.size()) {
        const double first = clusters[i].lo;
        const double reach = first + 2 * e;
        double count = 0, sum = 0, last = first;
        while (i < clusters.size() && clusters[i].hi <= reach) {
            count += clusters[i].count;
            sum += clusters[i].sum;
            last = clusters[i].hi;
            ++i;
        }
        double level = std::clamp(sum / count, last - e, first + e);
        if (levels.empty() || level > levels.back()) {
            levels.push_back(level);
        }
    }
    return levels;
}

/// Recomputes every cell of `dst` from `produce(k)`, which yields the new
/// amplitudes of the W cells listed by `indices(k)` for unit k. A new table
/// is fitted to the produced values first. `produce` must be a pure
/// function of k (it runs once per pass).
template <std::size_t W, class Produce, class Indices>
void reencode(EncodedState &dst, std::int64_t units, const Codebook &previous, Produce &&produce, Indices &&indices,
              int threads, CodecStats *stats) {
    MagnitudeSet set = kernels::chunked_reduce<MagnitudeSet>(
        units,
        [&](std::int64_t begin, std::int64_t end) {
            MagnitudeSet part;
            for (std::int64_t k = begin; k < end; ++k) {
                for (const Complex &v : produce(k)) {
                    part.add(v.real());
                    part.add(v.imag());
                }
            }
            return part;
        },
        threads, coarse_chunk(units));

    const bool lossy = set.overflow;
    Codebook book;
    if (!lossy) {
        book = Codebook::from_magnitudes(set.mags);
    } else {
        std::vector<Cluster> clusters;
        if (units * static_cast<std::int64_t>(2 * W) <= kExactFitParts) {
            MagnitudeList all = kernels::chunked_reduce<MagnitudeList>(
                units,
                [&](std::int64_t begin, std::int64_t end) {
                    MagnitudeList part;
                    for (std::int64_t k = begin; k < end; ++k) {
                        for (const Complex &v : produce(k)) {
                            for (double x : {std::abs(v.real()), std::abs(v.imag())}) {
                                if (x != 0) {
                                    part.values.push_back(x);
                                }
                            }
                        }
                    }
                    return part;
                },
                threads, coarse_chunk(units));
            std::sort(all.values.begin(), all.values.end());
            for (double x : all.values) {
                if (clusters.empty() || clusters.back().lo != x) {
                    clusters.push_back({x, x, 0, 0});
                }
                clusters.back().count += 1;
                clusters.back().sum += x;
            }
        } else {
            Histogram hist = kernels::chunked_reduce<Histogram>(
                units,
                [&](std::int64_t begin, std::int64_t end) {
                    Histogram part(set.max);
                    for (std::int64_t k = begin; k < end; ++k) {
                        for (const Complex &v : produce(k)) {
                            part.add(v.real());
                            part.add(v.imag());
                        }
                    }
                    return part;
                },
                threads, coarse_chunk(units));
            for (const Cluster &b : hist.bins) {
                if (b.count > 0) {
                    clusters.push_back(b);
                }
            }
        }
        book = Codebook::from_magnitudes(fit_levels(clusters));
    }
    book.inherit_history(previous, lossy);

    auto cells = dst.cells();
    CodecStats pass = kernels::chunked_reduce<CodecStats>(
        units,
        [&](std::int64_t begin, std::int64_t end) {
            CodecStats part;
            auto encode = [&](double v) -> std::uint8_t {
                if (!lossy) {
                    if (auto code = book.find_exact(v)) {
                        return *code;
                    }
                }
                std::uint8_t code = book.encode_nearest(v);
                double err = std::abs(v - book.lookup(code));
                if (err > 0) {
                    ++part.lossy_encodes;
                    part.max_rounding_error = std::max(part.max_rounding_error, err);
                    if (err > book.half_gap_at(v) * (1 + 1e-12)) {
                        ++part.bound_violations;
                    }
                }
                return code;
            };
            for (std::int64_t k = begin; k < end; ++k) {
                std::array<Complex, W> values = produce(k);
                std::array<std::uint64_t, W> where = indices(k);
                for (std::size_t w = 0; w < W; ++w) {
                    cells[where[w]] = Cell{encode(values[w].real()), encode(values[w].imag())};
                }
            }
            return part;
        },
        threads);

    dst.set_codebook(std::move(book));
    if (stats) {
        *stats += pass;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// EncodedState

EncodedState::EncodedState(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > 62) {
        throw std::length_error("encoded state of " + std::to_string(num_qubits) + " qubits is not addressable");
    }
    cells_.assign(std::size_t{1} << num_qubits, Cell{});
    const double one = 1.0;
    book_ = Codebook::from_magnitudes(std::span<const double>(&one, 1));
    cells_[0].re = *book_.find_exact(1.0);
}

EncodedState init_encoded_state(std::size_t n, std::uint64_t memory_budget) {
    if (n < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n > 62) {
        throw MemoryBudgetError(~std::uint64_t{0}, memory_budget);
    }
    check_budget(std::uint64_t{2} << n, memory_budget);
    return EncodedState(n);
}

EncodedState encode_state(const StateVector &state, int threads, CodecStats *stats) {
    EncodedState out(state.num_qubits());
    auto amps = state.amplitudes();
    reencode<1>(
        out, static_cast<std::int64_t>(amps.size()), Codebook{},
        [&](std::int64_t k) { return std::array<Complex, 1>{amps[static_cast<std::size_t>(k)]}; },
        [](std::int64_t k) { return std::array<std::uint64_t, 1>{static_cast<std::uint64_t>(k)}; }, threads, stats);
    return out;
}

StateVector decode_state(const EncodedState &state) {
    StateVector out(state.num_qubits());
    const Codebook &book = state.codebook();
    auto cells = state.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out[i] = {book.decode(cells[i].re), book.decode(cells[i].im)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gates

namespace {

/// Multiplication of a cell by i^power (power in 0..3) as a code move.
Cell rotate_quarter(Cell c, int power, const Codebook &book) {
    switch (power & 3) {
        case 1:  // (x + iy) i = -y + ix
            return {book.negate(c.im), c.re};
        case 2:
            return {book.negate(c.re), book.negate(c.im)};
        case 3:  // (x + iy)(-i) = y - ix
            return {c.im, book.negate(c.re)};
        default:
            return c;
    }
}

bool apply_code_move(EncodedState &state, const Gate &gate, int threads) {
    auto cells = state.cells();
    const Codebook &book = state.codebook();
    const std::size_t dim = cells.size();
    switch (gate.kind()) {
        case GateKind::I:
            return true;
        case GateKind::X:
            kernels::for_each_pair(dim, gate.qubit(0), [&](std::uint64_t i0, std::uint64_t i1) { std::swap(cells[i0], cells[i1]); }, threads);
            return true;
        case GateKind::Y:
            kernels::for_each_pair(
                dim, gate.qubit(0),
                [&](std::uint64_t i0, std::uint64_t i1) {
                    Cell a0 = cells[i0], a1 = cells[i1];
                    cells[i0] = rotate_quarter(a1, 3, book);
                    cells[i1] = rotate_quarter(a0, 1, book);
                },
                threads);
            return true;
        case GateKind::Z:
        case GateKind::S:
        case GateKind::SDG: {
            int power = gate.kind() == GateKind::Z ? 2 : gate.kind() == GateKind::S ? 1 : 3;
            kernels::for_each_pair(
                dim, gate.qubit(0), [&](std::uint64_t, std::uint64_t i1) { cells[i1] = rotate_quarter(cells[i1], power, book); },
                threads);
            return true;
        }
        case GateKind::CZ: {
            const std::uint64_t both = (std::uint64_t{1} << gate.qubit(0)) | (std::uint64_t{1} << gate.qubit(1));
            kernels::for_each_quad(
                dim, gate.qubit(0), gate.qubit(1),
                [&](std::uint64_t base) { cells[base | both] = rotate_quarter(cells[base | both], 2, book); }, threads);
            return true;
        }
        case GateKind::CNOT: {
            const std::uint64_t c = std::uint64_t{1} << gate.qubit(0), t = std::uint64_t{1} << gate.qubit(1);
            kernels::for_each_quad(
                dim, gate.qubit(0), gate.qubit(1), [&](std::uint64_t base) { std::swap(cells[base | c], cells[base | c | t]); },
                threads);
            return true;
        }
        case GateKind::SWAP: {
            const std::uint64_t a = std::uint64_t{1} << gate.qubit(0), b = std::uint64_t{1} << gate.qubit(1);
            kernels::for_each_quad(
                dim, gate.qubit(0), gate.qubit(1), [&](std::uint64_t base) { std::swap(cells[base | a], cells[base | b]); },
                threads);
            return true;
        }
        default:
            return false;
    }
}

}  // namespace

CodecStats &operator+=(CodecStats &a, const CodecStats &b) {
    a.lossy_encodes += b.lossy_encodes;
    a.max_rounding_error = std::max(a.max_rounding_error, b.max_rounding_error);
    a.bound_violations += b.bound_violations;
    return a;
}

void apply_gate_encoded(EncodedState &state, const Gate &gate, int threads, CodecStats *stats) {
    for (Qubit q : gate.qubits()) {
        if (q >= state.num_qubits()) {
            throw std::out_of_range(
                "gate " + to_string(gate) + " outside " + std::to_string(state.num_qubits()) + "-qubit state");
        }
    }
    if (apply_code_move(state, gate, threads)) {
        return;
    }
    const Matrix2 m = gate.matrix();
    const unsigned bit = gate.qubit(0);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    const Codebook previous = state.codebook();
    auto cells = state.cells();
    auto pair_index = [bit, mask](std::int64_t k) {
        std::uint64_t i0 = kernels::insert_zero_bit(static_cast<std::uint64_t>(k), bit);
        return std::array<std::uint64_t, 2>{i0, i0 | mask};
    };
    // Reads the old codes through `previous`; pass 3 overwrites each pair
    // only after producing it, and pairs are disjoint.
    auto produce = [&](std::int64_t k) {
        auto [i0, i1] = pair_index(k);
        Complex a0{previous.lookup(cells[i0].re), previous.lookup(cells[i0].im)};
        Complex a1{previous.lookup(cells[i1].re), previous.lookup(cells[i1].im)};
        return std::array<Complex, 2>{m[0] * a0 + m[1] * a1, m[2] * a0 + m[3] * a1};
    };
    reencode<2>(state, static_cast<std::int64_t>(cells.size() / 2), previous, produce, pair_index, threads, stats);
}

EncodedState run_circuit_encoded(const Circuit &circuit, const ExecOptions &options, CodecStats *stats) {
    EncodedState state = init_encoded_state(circuit.num_qubits(), options.memory_budget);
    for (const Gate &g : circuit) {
        apply_gate_encoded(state, g, options.threads, stats);
    }
    return state;
}

double max_abs_error(const EncodedState &encoded, const StateVector &ref) {
    if (encoded.size() != ref.size()) {
        throw std::invalid_argument(
            "reference has " + std::to_string(ref.num_qubits()) + " qubits, encoded state has " +
            std::to_string(encoded.num_qubits()));
    }
    double worst = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        worst = std::max(worst, std::abs(encoded.decode_at(i) - ref[i]));
    }
    return worst;
}

namespace {

struct PairMoments {
    double z = 0;
    Complex xy{0, 0};
    PairMoments &operator+=(const PairMoments &o) {
        z += o.z;
        xy += o.xy;
        return *this;
    }
};

}  // namespace

QubitExpectation expectation_all_axes(const EncodedState &state, Qubit q, int threads) {
    if (q >= state.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside encoded state");
    }
    const std::uint64_t mask = std::uint64_t{1} << q;
    PairMoments m = kernels::chunked_reduce<PairMoments>(
        static_cast<std::int64_t>(state.size() / 2),
        [&](std::int64_t begin, std::int64_t end) {
            PairMoments part;
            for (std::int64_t k = begin; k < end; ++k) {
                std::uint64_t i0 = kernels::insert_zero_bit(static_cast<std::uint64_t>(k), q);
                Complex a0 = state.decode_at(i0), a1 = state.decode_at(i0 | mask);
                part.z += std::norm(a0) - std::norm(a1);
                part.xy += std::conj(a0) * a1;
            }
            return part;
        },
        threads);
    return expectation_from_moments(m.z, m.xy);
}

double expectation(const EncodedState &state, Axis axis, Qubit q, int threads) {
    QubitExpectation e = expectation_all_axes(state, q, threads);
    return axis == Axis::X ? e.x : axis == Axis::Y ? e.y : e.z;
}

ExpectationReport measure_expectations(const EncodedState &state, int threads) {
    ExpectationReport report;
    for (Qubit q = 0; q < state.num_qubits(); ++q) {
        report.qubits.push_back(expectation_all_axes(state, q, threads));
    }
    return report;
}

}  // namespace qcsim
