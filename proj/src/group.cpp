#include "ultra/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ultra/components.hpp"

namespace ultra {

BitVector::BitVector(std::vector<long long> support) : support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    if (!support_.empty() && support_.front() < 1) {
        throw std::invalid_argument("BitVector: coordinates are positive integers");
    }
}

long long BitVector::max_coordinate() const {
    return support_.empty() ? 0 : support_.back();
}

bool BitVector::contains(long long coordinate) const {
    return std::binary_search(support_.begin(), support_.end(), coordinate);
}

BitVector BitVector::xor_with(const BitVector& other) const {
    std::vector<long long> out;
    std::set_symmetric_difference(support_.begin(), support_.end(),
                                  other.support_.begin(), other.support_.end(),
                                  std::back_inserter(out));
    BitVector result;
    result.support_ = std::move(out);
    return result;
}

std::string BitVector::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(support_[i]);
    }
    return out + "}";
}

Filtration::Filtration(std::vector<long long> scales, std::vector<long long> dims)
    : scales_(std::move(scales)), dims_(std::move(dims)) {
    if (scales_.empty() || scales_.front() != 0 || dims_.empty() || dims_.front() != 0 ||
        scales_.size() != dims_.size()) {
        throw std::invalid_argument("Filtration: must start at (0, 0) with equal lengths");
    }
    for (std::size_t i = 1; i < scales_.size(); ++i) {
        if (scales_[i] <= scales_[i - 1]) {
            throw std::invalid_argument("Filtration: scales must strictly increase");
        }
        if (dims_[i] < dims_[i - 1]) {
            throw std::invalid_argument("Filtration: dims must be non-decreasing");
        }
    }
}

Filtration Filtration::unit_scales(std::vector<long long> dims) {
    std::vector<long long> scales(dims.size());
    for (std::size_t i = 0; i < scales.size(); ++i) scales[i] = static_cast<long long>(i);
    return Filtration(std::move(scales), std::move(dims));
}

std::string Filtration::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        if (i) out += " ";
        out += "(" + std::to_string(scales_[i]) + "," + std::to_string(dims_[i]) + ")";
    }
    return out;
}

Rat filtration_metric(const Filtration& f, const BitVector& g, const BitVector& h) {
    BitVector diff = g.xor_with(h);
    if (diff.empty()) return Rat(0);
    long long top = diff.max_coordinate();
    for (std::size_t n = 0; n < f.depth(); ++n) {
        if (f.dims()[n] >= top) return Rat(f.scales()[n]);
    }
    throw std::invalid_argument("filtration_metric: support exceeds the truncation depth");
}

FiltrationEquivalence filtrations_equivalent(const Filtration& f1, const Filtration& f2,
                                             std::size_t depth) {
    FiltrationEquivalence out;
    out.equivalent = true;

    // The first `depth` scales of each side must find a covering subgroup
    // anywhere in the other filtration as given.
    auto match = [](const Filtration& from, std::size_t dn, const Filtration& to,
                    std::vector<std::size_t>& table) -> std::optional<long long> {
        for (std::size_t n = 0; n < dn; ++n) {
            bool found = false;
            for (std::size_t m = 0; m < to.depth(); ++m) {
                if (to.dims()[m] >= from.dims()[n]) {
                    table.push_back(m);
                    found = true;
                    break;
                }
            }
            if (!found) return from.scales()[n];
        }
        return std::nullopt;
    };

    if (auto fail = match(f1, std::min(depth, f1.depth()), f2, out.forward)) {
        out.equivalent = false;
        out.failing_scale = *fail;
        out.failing_side = 1;
        return out;
    }
    if (auto fail = match(f2, std::min(depth, f2.depth()), f1, out.backward)) {
        out.equivalent = false;
        out.failing_scale = *fail;
        out.failing_side = 2;
        return out;
    }
    return out;
}

CapacityProfile capacity_profile(const FiniteMetricSpace& m) {
    auto vs = value_set(m);
    if (!vs.ok() || !validate_ultrametric(m).empty()) {
        throw std::invalid_argument("capacity_profile: space is not an integral ultrametric");
    }
    long long diam = static_cast<long long>(rat_floor(m.diameter()));
    CapacityProfile profile;
    for (long long n = 0; n <= diam; ++n) {
        Rat radius(n + 2);
        long long best = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            long long count = 0;
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (m.dist(i, j) <= radius) ++count;
            }
            best = std::max(best, count);
        }
        profile.c.push_back(best);
    }
    return profile;
}

namespace {

long long ceil_log2(long long q) {
    long long bits = 0;
    while ((1LL << bits) < q) ++bits;
    return bits;
}

// Partition chain of an integral ultrametric space: chain[n] assigns each
// point the id of its (d <= n)-class, for n = 0..diam. Class ids are block
// positions in least-member order.
std::vector<std::vector<std::size_t>> partition_chain(const FiniteMetricSpace& m,
                                                      long long diam) {
    std::vector<std::vector<std::size_t>> chain;
    for (long long n = 0; n <= diam; ++n) {
        auto blocks = threshold_blocks(m, Rat(n), /*strict=*/false);
        std::vector<std::size_t> class_of(m.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (const auto& id : blocks[b]) class_of[m.index_of(id)] = b;
        }
        chain.push_back(std::move(class_of));
    }
    return chain;
}

// max number of (d <= n-1)-subclasses inside a (d <= n)-class, per n >= 1
std::vector<long long> subclass_counts(const FiniteMetricSpace& m,
                                       const std::vector<std::vector<std::size_t>>& chain) {
    std::vector<long long> q;
    for (std::size_t n = 1; n < chain.size(); ++n) {
        std::map<std::size_t, std::set<std::size_t>> fine_inside;
        for (std::size_t i = 0; i < m.size(); ++i) {
            fine_inside[chain[n][i]].insert(chain[n - 1][i]);
        }
        long long best = 0;
        for (const auto& [cls, fines] : fine_inside) {
            best = std::max(best, static_cast<long long>(fines.size()));
        }
        q.push_back(best);
    }
    return q;
}

void require_unit_scales(const Filtration& f, long long diam) {
    if (static_cast<long long>(f.depth()) < diam + 1) {
        throw std::invalid_argument("filtration too shallow for the space diameter");
    }
    for (std::size_t i = 0; i < f.depth(); ++i) {
        if (f.scales()[i] != static_cast<long long>(i)) {
            throw std::invalid_argument("filtration must use unit scales 0,1,2,...");
        }
    }
}

}  // namespace

GroupEmbedding embed_into_group(const FiniteMetricSpace& m,
                                const std::optional<Filtration>& filtration) {
    auto vs = value_set(m);
    if (!vs.ok() || !validate_ultrametric(m).empty()) {
        throw std::invalid_argument(
            "embed_into_group: space is not an integral ultrametric");
    }
    long long diam = static_cast<long long>(rat_floor(m.diameter()));

    auto chain = partition_chain(m, diam);
    auto q = subclass_counts(m, chain);

    GroupEmbedding out;
    out.subclass_counts = q;

    std::vector<long long> dims{0};
    if (filtration) {
        require_unit_scales(*filtration, diam);
        for (long long n = 1; n <= diam; ++n) {
            long long delta = filtration->dims()[n] - filtration->dims()[n - 1];
            if ((1LL << std::min<long long>(delta, 62)) < q[n - 1]) {
                throw std::invalid_argument(
                    "embed_into_group: filtration capacity violated at scale " +
                    std::to_string(n));
            }
        }
        out.filtration = *filtration;
        dims = filtration->dims();
    } else {
        for (long long n = 1; n <= diam; ++n) {
            dims.push_back(dims.back() + ceil_log2(q[n - 1]));
        }
        out.filtration = Filtration::unit_scales(dims);
    }

    // Per threshold n, tag the (d <= n-1)-subclasses of each (d <= n)-class
    // with distinct bit patterns on the coordinates new at scale n; the
    // first subclass of each class keeps the identity tag.
    std::vector<std::map<std::size_t, BitVector>> tag(diam + 1);
    for (long long n = 1; n <= diam; ++n) {
        std::map<std::size_t, std::vector<std::size_t>> subclasses;
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto& list = subclasses[chain[n][i]];
            if (std::find(list.begin(), list.end(), chain[n - 1][i]) == list.end()) {
                list.push_back(chain[n - 1][i]);
            }
        }
        for (auto& [cls, fines] : subclasses) {
            std::sort(fines.begin(), fines.end());  // block ids follow least-member order
            for (std::size_t j = 0; j < fines.size(); ++j) {
                std::vector<long long> bits;
                for (long long b = 0; (1LL << b) <= static_cast<long long>(j); ++b) {
                    if (j & (1ULL << b)) bits.push_back(dims[n - 1] + 1 + b);
                }
                tag[n][fines[j]] = BitVector(std::move(bits));
            }
        }
    }

    for (std::size_t i = 0; i < m.size(); ++i) {
        BitVector image;
        for (long long n = 1; n <= diam; ++n) {
            image = image.xor_with(tag[n].at(chain[n - 1][i]));
        }
        out.images[m.point(i)] = std::move(image);
    }

    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            Rat got = filtration_metric(out.filtration, out.images.at(m.point(i)),
                                        out.images.at(m.point(j)));
            if (got != m.dist(i, j)) {
                throw std::logic_error("embed_into_group: verification failed on '" +
                                       m.point(i) + "','" + m.point(j) + "'");
            }
        }
    }
    return out;
}

BlockTranslateResult block_translate_embed(const CoarseUnion& u,
                                           const std::optional<Filtration>& filtration) {
    BlockTranslateResult out;
    const std::size_t nblocks = u.parts.size();

    std::vector<FiniteMetricSpace> blocks;
    std::vector<long long> radii, diams;
    for (std::size_t k = 0; k < nblocks; ++k) {
        blocks.push_back(u.part_space(k));
        if (!rat_is_integer(u.parts[k].base_value)) {
            throw std::invalid_argument("block_translate_embed: non-integer base value");
        }
        radii.push_back(static_cast<long long>(rat_num(u.parts[k].base_value)));
        auto vs = value_set(blocks.back());
        if (!vs.ok()) {
            throw std::invalid_argument("block_translate_embed: block " +
                                        std::to_string(k + 1) + " is not integral");
        }
        diams.push_back(static_cast<long long>(rat_floor(blocks.back().diameter())));
    }
    long long max_diam = *std::max_element(diams.begin(), diams.end());

    // merged low filtration: enough new coordinates per threshold for every block
    std::vector<long long> merged_q(static_cast<std::size_t>(max_diam), 1);
    for (std::size_t k = 0; k < nblocks; ++k) {
        auto chain = partition_chain(blocks[k], diams[k]);
        auto q = subclass_counts(blocks[k], chain);
        for (std::size_t n = 0; n < q.size(); ++n) {
            merged_q[n] = std::max(merged_q[n], q[n]);
        }
    }

    // translation norms: s_1 > max(r_1, max_diam) and
    // s_k > max(s_{k-1}, r_{k-1} + diam_k, max_diam)
    std::vector<long long> norms;
    for (std::size_t k = 0; k < nblocks; ++k) {
        long long bound = max_diam;
        if (k == 0) {
            bound = std::max(bound, radii[0]);
        } else {
            bound = std::max({bound, norms.back(), radii[k - 1] + diams[k]});
        }
        norms.push_back(bound + 1);
    }
    long long top_scale = norms.back();

    std::vector<long long> dims{0};
    std::vector<long long> translator_coord(nblocks);
    if (filtration) {
        require_unit_scales(*filtration, top_scale);
        for (long long n = 1; n <= max_diam; ++n) {
            long long delta = filtration->dims()[n] - filtration->dims()[n - 1];
            if ((1LL << std::min<long long>(delta, 62)) < merged_q[n - 1]) {
                throw std::invalid_argument(
                    "block_translate_embed: filtration capacity violated at scale " +
                    std::to_string(n));
            }
        }
        for (std::size_t k = 0; k < nblocks; ++k) {
            long long s = norms[k];
            if (filtration->dims()[s] <= filtration->dims()[s - 1]) {
                throw std::invalid_argument(
                    "block_translate_embed: filtration has no fresh coordinate at scale " +
                    std::to_string(s));
            }
            translator_coord[k] = filtration->dims()[s];
        }
        out.filtration = *filtration;
        dims = filtration->dims();
    } else {
        for (long long n = 1; n <= max_diam; ++n) {
            dims.push_back(dims.back() + ceil_log2(merged_q[n - 1]));
        }
        std::size_t next_block = 0;
        for (long long n = max_diam + 1; n <= top_scale; ++n) {
            long long d = dims.back();
            if (next_block < nblocks && norms[next_block] == n) {
                ++d;
                translator_coord[next_block] = d;
                ++next_block;
            }
            dims.push_back(d);
        }
        out.filtration = Filtration::unit_scales(dims);
    }

    for (std::size_t k = 0; k < nblocks; ++k) {
        out.norms.push_back(Rat(norms[k]));
        out.translators.push_back(BitVector({translator_coord[k]}));
    }

    // embed each block against the shared filtration, then translate
    for (std::size_t k = 0; k < nblocks; ++k) {
        GroupEmbedding emb = embed_into_group(blocks[k], out.filtration);
        for (const auto& [id, vec] : emb.images) {
            out.images[id] = out.translators[k].xor_with(vec);
        }
    }

    // verification: within-block isometry, annulus membership, cross-block rule
    for (std::size_t k = 0; k < nblocks; ++k) {
        const auto& ids = u.parts[k].ids;
        for (std::size_t a = 0; a < ids.size(); ++a) {
            Rat norm = filtration_metric(out.filtration, out.images.at(ids[a]),
                                         BitVector::identity());
            Rat low = k == 0 ? Rat(0) : out.norms[k - 1];
            if (!(low < norm && norm <= out.norms[k])) {
                out.report.push_back({"annulus", {ids[a]},
                                      "norm " + rat_to_string(norm) + " outside (" +
                                          rat_to_string(low) + ", " +
                                          rat_to_string(out.norms[k]) + "]"});
            }
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                Rat got = filtration_metric(out.filtration, out.images.at(ids[a]),
                                            out.images.at(ids[b]));
                if (got != u.total.dist(ids[a], ids[b])) {
                    out.report.push_back({"within-block", {ids[a], ids[b]},
                                          "image distance " + rat_to_string(got)});
                }
            }
        }
        for (std::size_t l = k + 1; l < nblocks; ++l) {
            for (const auto& x : u.parts[k].ids) {
                for (const auto& y : u.parts[l].ids) {
                    Rat got = filtration_metric(out.filtration, out.images.at(x),
                                                out.images.at(y));
                    Rat expected = std::max(out.norms[k], out.norms[l]);
                    if (got != expected) {
                        out.report.push_back({"cross-block", {x, y},
                                              "image distance " + rat_to_string(got) +
                                                  " expected " + rat_to_string(expected)});
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace ultra
