#include "ultra/pu.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ultra/validate.hpp"

namespace ultra {

DSet dset_index(long long n) {
    if (n < 1) throw std::invalid_argument("dset_index: index must be >= 1");
    std::vector<long long> values{0};
    for (long long g = 1; (1LL << (g - 1)) <= n; ++g) {
        if (n & (1LL << (g - 1))) values.push_back(g);
    }
    return DSet(std::move(values));
}

long long index_dset(const DSet& d) {
    long long n = 0;
    for (long long g : d.positives()) {
        if (g > 62) throw std::invalid_argument("index_dset: value too large to encode");
        n |= 1LL << (g - 1);
    }
    return n;
}

std::pair<long long, long long> pu_block_pair(long long i) {
    if (i < 1) throw std::invalid_argument("pu_block_pair: index must be >= 1");
    // diagonal s holds pairs (m, s-m) for m = 1..s-1
    long long s = 2;
    long long before = 0;  // pairs on diagonals < s
    while (before + (s - 1) < i) {
        before += s - 1;
        ++s;
    }
    long long m = i - before;
    return {m, s - m};
}

PUBlock pu_block_info(long long i) {
    auto [m, n] = pu_block_pair(i);
    PUBlock b;
    b.index = i;
    b.m = m;
    b.n = n;
    b.D = dset_index(n);
    b.diam = m == 1 ? Rat(0) : Rat(b.D.max());
    Rat sum(0);
    for (long long j = 1; j <= i; ++j) {
        auto [mj, nj] = pu_block_pair(j);
        sum += mj == 1 ? Rat(0) : Rat(dset_index(nj).max());
    }
    b.radius = Rat(i) + sum;
    return b;
}

PUPrefix build_PU_prefix(long long block_count) {
    if (block_count < 1) throw std::invalid_argument("build_PU_prefix: need >= 1 block");
    long long total_points = 0;
    for (long long i = 1; i <= block_count; ++i) {
        auto [m, n] = pu_block_pair(i);
        total_points += fu_expected_size(m, dset_index(n));
        if (total_points > 10000) {
            throw std::invalid_argument("build_PU_prefix: materialization guard exceeded");
        }
    }

    PUPrefix out;
    out.block_count = block_count;

    std::vector<std::string> base_ids;
    std::map<std::string, FiniteMetricSpace> fibers;
    Rat diam_sum(0);
    for (long long i = 1; i <= block_count; ++i) {
        auto [m, n] = pu_block_pair(i);
        PUBlock block;
        block.index = i;
        block.m = m;
        block.n = n;
        block.D = dset_index(n);
        FUSpace fu = build_FU(m, block.D);
        block.diam = fu.space.diameter();
        diam_sum += block.diam;
        block.radius = Rat(i) + diam_sum;

        const std::string prefix = std::to_string(i) + "/";
        std::vector<std::string> ids;
        for (const auto& p : fu.space.points()) ids.push_back(prefix + p);
        std::vector<std::vector<Rat>> d(ids.size(), std::vector<Rat>(ids.size(), Rat(0)));
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = 0; b < ids.size(); ++b) d[a][b] = fu.space.dist(a, b);
        }
        std::string base_id = rat_to_string(block.radius);
        base_ids.push_back(base_id);
        fibers.emplace(base_id, FiniteMetricSpace(ids, std::move(d)));

        out.blocks.push_back(block);
        out.block_spaces.push_back(std::move(fu));
    }

    const std::size_t nb = base_ids.size();
    std::vector<std::vector<Rat>> bd(nb, std::vector<Rat>(nb, Rat(0)));
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = i + 1; j < nb; ++j) {
            Rat v = std::max(out.blocks[i].radius, out.blocks[j].radius);
            bd[i][j] = v;
            bd[j][i] = v;
        }
    }
    FiniteMetricSpace base(base_ids, std::move(bd));
    out.resolution = assemble_total(base, fibers, AssembleMode::ultrametric);

    out.union_view.total = out.resolution.total;
    auto fiber_ids = out.resolution.fibers();
    for (std::size_t i = 0; i < nb; ++i) {
        UnionPart part;
        part.ids = fiber_ids.at(base_ids[i]);
        part.basepoint = *std::min_element(part.ids.begin(), part.ids.end());
        part.base_value = out.blocks[i].radius;
        out.union_view.parts.push_back(std::move(part));
    }
    return out;
}

PUEmbedding embed_into_PU(const CoarseUnion& u) {
    PUEmbedding out;

    std::vector<FiniteMetricSpace> part_spaces;
    for (std::size_t k = 0; k < u.parts.size(); ++k) {
        part_spaces.push_back(u.part_space(k));
        auto vs = value_set(part_spaces.back());
        if (!vs.ok()) {
            throw std::invalid_argument("embed_into_PU: part " + std::to_string(k + 1) +
                                        " has a non-integer distance between '" +
                                        vs.non_integral_pair->first + "' and '" +
                                        vs.non_integral_pair->second + "'");
        }
    }

    // greedy matcher: each admissible (budget, D) pattern recurs cofinally
    long long next_index = 1;
    std::vector<FUSpace> targets;
    for (std::size_t k = 0; k < u.parts.size(); ++k) {
        const FiniteMetricSpace& part = part_spaces[k];
        long long size = static_cast<long long>(part.size());
        long long required = index_dset(*value_set(part).dset);
        for (;; ++next_index) {
            auto [m, n] = pu_block_pair(next_index);
            if (m >= size && (n & required) == required) break;
        }
        PUBlock block = pu_block_info(next_index);
        FUSpace fu = build_FU(block.m, block.D);
        auto emb = embed_into_FU(part, block.m, block.D);
        for (const auto& [id, fid] : emb) {
            out.point_map[id] = {block.index, fid};
        }
        out.chosen.push_back(block);
        targets.push_back(std::move(fu));
        ++next_index;  // strictly increasing
    }

    // distortion vs the abstract PU distances: same block -> FU metric,
    // different blocks -> max of the radii
    std::map<std::string, std::size_t> part_index;
    for (std::size_t k = 0; k < u.parts.size(); ++k) {
        for (const auto& id : u.parts[k].ids) part_index[id] = k;
    }
    std::vector<std::pair<Rat, Rat>> pairs;
    const auto& pts = u.total.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::size_t ki = part_index.at(pts[i]);
            std::size_t kj = part_index.at(pts[j]);
            Rat output;
            if (ki == kj) {
                output = targets[ki].space.dist(out.point_map.at(pts[i]).second,
                                                out.point_map.at(pts[j]).second);
            } else {
                output = std::max(out.chosen[ki].radius, out.chosen[kj].radius);
            }
            pairs.emplace_back(u.total.dist(i, j), output);
        }
    }
    std::set<Rat> in_values, out_values;
    for (const auto& [a, b] : pairs) {
        in_values.insert(a);
        out_values.insert(b);
    }
    for (const Rat& r : in_values) {
        Rat worst(0);
        for (const auto& [a, b] : pairs) {
            if (a <= r && b > worst) worst = b;
        }
        out.distortion.forward.emplace_back(r, worst);
    }
    for (const Rat& r : out_values) {
        Rat worst(0);
        for (const auto& [a, b] : pairs) {
            if (b <= r && a > worst) worst = a;
        }
        out.distortion.backward.emplace_back(r, worst);
    }
    return out;
}

CoarseUnion counterexample_family(long long levels, long long points_per_part) {
    if (levels < 1 || points_per_part < 1) {
        throw std::invalid_argument("counterexample_family: levels and size must be >= 1");
    }
    std::vector<FiniteMetricSpace> parts;
    for (long long n = 1; n <= levels; ++n) {
        std::vector<std::string> ids;
        for (long long p = 0; p < points_per_part; ++p) {
            ids.push_back("t" + std::to_string(p));
        }
        std::vector<std::vector<Rat>> d(ids.size(), std::vector<Rat>(ids.size(), Rat(0)));
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (i != j) d[i][j] = Rat(n + 1);
            }
        }
        parts.emplace_back(std::move(ids), std::move(d));
    }
    return coarse_union(parts);
}

}  // namespace ultra
