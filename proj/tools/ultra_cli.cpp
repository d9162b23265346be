// Command line surface over the ultracoarse library: validation, chain
// metrics, dendrograms, universal spaces and group embeddings. All output is
// deterministic; exit codes are 0 (success), 1 (validation or input
// failure), 2 (usage error).

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ultra/catalog.hpp"
#include "ultra/chain_metric.hpp"
#include "ultra/coarse_union.hpp"
#include "ultra/cu.hpp"
#include "ultra/fu.hpp"
#include "ultra/group.hpp"
#include "ultra/lego.hpp"
#include "ultra/pu.hpp"
#include "ultra/space_io.hpp"
#include "ultra/splice.hpp"
#include "ultra/validate.hpp"

namespace {

using namespace ultra;

int report_status(const ValidationReport& report) { return report.empty() ? 0 : 1; }

int cmd_validate(const std::string& path, bool ultrametric, bool isosceles, bool values) {
    SpaceDocument doc = parse_space_file(path);
    int status = 0;

    auto metric = validate_metric(doc.space);
    std::cout << "metric: " << (metric.empty() ? "ok\n" : "\n" + report_to_text(metric));
    status |= report_status(metric);

    if (ultrametric) {
        auto r = validate_ultrametric(doc.space);
        std::cout << "ultrametric: " << (r.empty() ? "ok\n" : "\n" + report_to_text(r));
        status |= report_status(r);
    }
    if (isosceles) {
        auto r = validate_isosceles(doc.space);
        std::cout << "isosceles: " << (r.empty() ? "ok\n" : "\n" + report_to_text(r));
        status |= report_status(r);
    }
    if (values) {
        auto r = value_set(doc.space);
        if (r.ok()) {
            std::cout << "values: " << r.dset->to_string() << "\n";
        } else {
            std::cout << "values: non-integral between '" << r.non_integral_pair->first
                      << "' and '" << r.non_integral_pair->second << "'\n";
            status = 1;
        }
    }
    return status;
}

int cmd_chain(const std::string& path, bool discretize_flag) {
    SpaceDocument doc = parse_space_file(path);
    SpaceDocument out;
    if (discretize_flag) {
        out.space = discretize(doc.space).ultrametric;
    } else {
        out.space = chain_ultrametric_identity(doc.space).space;
    }
    std::cout << serialize_space(out);
    return 0;
}

int cmd_decompose(const std::string& path, bool dot) {
    SpaceDocument doc = parse_space_file(path);
    LegoTree tree = lego_decompose(doc.space);
    std::cout << (dot ? to_dot(tree) : to_newick(tree) + "\n");
    return 0;
}

int cmd_fu_build(long long m, const std::string& dspec, bool literal) {
    DSet d = DSet::parse(dspec);
    FUSpace fu = literal ? build_FU_literal(m, d) : build_FU(m, d);
    SpaceDocument doc;
    doc.space = fu.space;
    doc.labels = fu.labels;
    std::cout << serialize_space(doc);
    return 0;
}

int cmd_fu_embed(const std::string& path, long long m, const std::string& dspec) {
    SpaceDocument doc = parse_space_file(path);
    DSet d = DSet::parse(dspec);
    auto emb = embed_into_FU(doc.space, m, d);
    for (const auto& [id, target] : emb) {
        std::cout << id << "\t" << target << "\n";
    }
    return 0;
}

int cmd_enumerate(long long m, const std::string& dspec) {
    DSet d = DSet::parse(dspec);
    UltraCatalog cat = enumerate_ultrametrics(m, d);
    for (std::size_t i = 0; i < cat.spaces.size(); ++i) {
        std::cout << "class " << i << ": "
                  << to_newick(lego_decompose(cat.spaces[i])) << "\n";
    }
    std::cout << "total " << cat.spaces.size() << " classes\n";
    return 0;
}

int cmd_cu_embed(const std::string& path) {
    SpaceDocument doc = parse_space_file(path);
    CUEmbedding emb = embed_into_CU(doc.space);
    for (const auto& id : doc.space.points()) {
        const CUPoint& p = emb.full_map.at(id);
        std::cout << id << "\t" << p.level << "\t(";
        for (std::size_t i = 0; i < p.address.coords.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << p.address.coords[i];
        }
        std::cout << ")\n";
    }
    std::cout << "net gap " << rat_to_string(emb.max_net_gap) << "\n";
    return 0;
}

SpaceDocument union_to_document(const CoarseUnion& u) {
    SpaceDocument doc;
    doc.space = u.total;
    for (const auto& part : u.parts) {
        doc.parts.push_back(part.ids);
        doc.basepoints.push_back(part.basepoint);
    }
    return doc;
}

// Unions written by `union build` carry the canonical stride base values,
// which this loader recomputes from the part diameters.
CoarseUnion union_from_document(const SpaceDocument& doc) {
    if (doc.parts.empty() || doc.parts.size() != doc.basepoints.size()) {
        throw SpaceParseError("union document needs aligned 'parts' and 'basepoints'");
    }
    CoarseUnion u;
    u.total = doc.space;
    Rat stride(1);
    for (const auto& ids : doc.parts) {
        stride = std::max(stride, Rat(1) + u.total.restrict_to(ids).diameter());
    }
    for (std::size_t k = 0; k < doc.parts.size(); ++k) {
        UnionPart part;
        part.ids = doc.parts[k];
        part.basepoint = doc.basepoints[k];
        part.base_value = stride * Rat(static_cast<long long>(k + 1));
        u.parts.push_back(std::move(part));
    }
    return u;
}

int cmd_union_build(const std::vector<std::string>& paths) {
    std::vector<FiniteMetricSpace> parts;
    for (const auto& p : paths) parts.push_back(parse_space_file(p).space);
    CoarseUnion u = coarse_union(parts);
    std::cout << serialize_space(union_to_document(u));
    return 0;
}

int cmd_union_witness(const std::string& path, const std::string& scale) {
    SpaceDocument doc = parse_space_file(path);
    CoarseUnion u = union_from_document(doc);
    BoundedWitness w = verify_union_at_scale(u, parse_rational(scale));
    for (std::size_t k = 0; k < w.bounded_sets.size(); ++k) {
        std::cout << "part " << (k + 1) << ":";
        if (w.bounded_sets[k].empty()) {
            std::cout << " -";
        } else {
            for (const auto& id : w.bounded_sets[k]) std::cout << " " << id;
        }
        std::cout << "\n";
    }
    std::cout << (w.valid() ? "valid\n" : report_to_text(w.violations));
    return w.valid() ? 0 : 1;
}

int cmd_union_bounded(const std::string& path, const std::vector<std::string>& ids) {
    SpaceDocument doc = parse_space_file(path);
    CoarseUnion u = union_from_document(doc);
    auto pieces = union_boundedness_check(u, ids);
    for (const auto& piece : pieces) {
        std::cout << "part " << (piece.part_index + 1) << " diam "
                  << rat_to_string(piece.diameter) << ":";
        for (const auto& id : piece.ids) std::cout << " " << id;
        std::cout << "\n";
    }
    std::cout << pieces.size() << " parts touched\n";
    return 0;
}

int cmd_pu_build(long long n) {
    PUPrefix prefix = build_PU_prefix(n);
    std::cout << serialize_space(union_to_document(prefix.union_view));
    return 0;
}

int cmd_pu_embed(const std::string& path) {
    SpaceDocument doc = parse_space_file(path);
    CoarseUnion u = union_from_document(doc);
    PUEmbedding emb = embed_into_PU(u);
    for (std::size_t k = 0; k < emb.chosen.size(); ++k) {
        const PUBlock& b = emb.chosen[k];
        std::cout << "part " << (k + 1) << " -> block " << b.index << " (m=" << b.m
                  << ", D=" << b.D.to_string() << ", r=" << rat_to_string(b.radius)
                  << ")\n";
    }
    for (const auto& [id, target] : emb.point_map) {
        std::cout << id << "\t" << target.first << "/" << target.second << "\n";
    }
    for (const auto& [r, worst] : emb.distortion.forward) {
        std::cout << "forward " << rat_to_string(r) << " -> " << rat_to_string(worst)
                  << "\n";
    }
    for (const auto& [r, worst] : emb.distortion.backward) {
        std::cout << "backward " << rat_to_string(r) << " -> " << rat_to_string(worst)
                  << "\n";
    }
    return 0;
}

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& items,
                                            const std::string& what) {
    std::map<std::string, std::string> out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw std::invalid_argument("bad " + what + " '" + item +
                                        "', expected key=value");
        }
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int cmd_splice(const std::string& base_path, const std::vector<std::string>& fiber_args,
               const std::vector<std::string>& section_args) {
    SpliceSpec spec;
    spec.base = parse_space_file(base_path).space;
    for (const auto& [base_id, fiber_path] : parse_kv(fiber_args, "--fiber")) {
        spec.fibers.emplace(base_id, parse_space_file(fiber_path).space);
    }
    spec.section = SpliceSpec::default_section(spec.base, spec.fibers);
    for (const auto& [base_id, point] : parse_kv(section_args, "--section")) {
        spec.section[base_id] = point;
    }
    SpaceDocument doc;
    doc.space = splice_metric(spec);
    std::cout << serialize_space(doc);
    return 0;
}

int cmd_group_embed(const std::string& path) {
    SpaceDocument doc = parse_space_file(path);
    GroupEmbedding emb = embed_into_group(doc.space);
    std::cout << "filtration: " << emb.filtration.to_string() << "\n";
    for (const auto& id : doc.space.points()) {
        std::cout << id << "\t" << emb.images.at(id).to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coarse geometry of finite ultrametric spaces"};
    app.require_subcommand(1);

    std::string path, dspec, scale, base_path;
    std::vector<std::string> paths, ids, fiber_args, section_args;
    long long m = 1, n = 1;
    bool flag_ultra = false, flag_iso = false, flag_values = false;
    bool flag_discretize = false, flag_dot = false, flag_newick = false,
         flag_literal = false;

    auto* validate = app.add_subcommand("validate", "check metric axioms");
    validate->add_option("file", path)->required();
    validate->add_flag("--ultrametric", flag_ultra);
    validate->add_flag("--isosceles", flag_iso);
    validate->add_flag("--values", flag_values);

    auto* chain = app.add_subcommand("chain", "induced integral chain ultrametric");
    chain->add_option("file", path)->required();
    chain->add_flag("--discretize", flag_discretize,
                    "restrict to a 1-separated net first");

    auto* decompose = app.add_subcommand("decompose", "dendrogram of an ultrametric space");
    decompose->add_option("file", path)->required();
    decompose->add_flag("--newick", flag_newick);
    decompose->add_flag("--dot", flag_dot);

    auto* fu = app.add_subcommand("fu", "finite universal spaces");
    auto* fu_build = fu->add_subcommand("build", "materialize FU(m, D)");
    fu_build->add_option("m", m)->required();
    fu_build->add_option("D", dspec)->required();
    fu_build->add_flag("--literal", flag_literal);
    auto* fu_embed = fu->add_subcommand("embed", "embed a space into FU(m, D)");
    fu_embed->add_option("file", path)->required();
    fu_embed->add_option("m", m)->required();
    fu_embed->add_option("D", dspec)->required();

    auto* enumerate = app.add_subcommand("enumerate", "isometry classes of D-ultrametrics");
    enumerate->add_option("m", m)->required();
    enumerate->add_option("D", dspec)->required();

    auto* cu_embed = app.add_subcommand("cu-embed", "embed into the universal space CU");
    cu_embed->add_option("file", path)->required();

    auto* pu = app.add_subcommand("pu", "proper universal space prefixes");
    auto* pu_build = pu->add_subcommand("build", "materialize the first N blocks");
    pu_build->add_option("N", n)->required();
    auto* pu_embed = pu->add_subcommand("embed", "place a union into PU blocks");
    pu_embed->add_option("file", path)->required();

    auto* union_cmd = app.add_subcommand("union", "coarse disjoint unions");
    auto* union_build = union_cmd->add_subcommand("build", "splice parts into a union");
    union_build->add_option("files", paths)->required();
    auto* union_witness = union_cmd->add_subcommand("witness", "bounded-set witness");
    union_witness->add_option("file", path)->required();
    union_witness->add_option("--scale", scale)->required();
    auto* union_bounded = union_cmd->add_subcommand("bounded", "decompose a bounded set");
    union_bounded->add_option("file", path)->required();
    union_bounded->add_option("ids", ids)->required();

    auto* splice = app.add_subcommand("splice", "splice fiber metrics along a section");
    splice->add_option("base", base_path)->required();
    splice->add_option("--fiber", fiber_args, "baseid=spacefile")->required();
    splice->add_option("--section", section_args, "baseid=pointid");

    auto* group_embed = app.add_subcommand("group-embed",
                                           "embed into the Z/2 vector-space group");
    group_embed->add_option("file", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(path, flag_ultra, flag_iso, flag_values);
        if (*chain) return cmd_chain(path, flag_discretize);
        if (*decompose) return cmd_decompose(path, flag_dot);
        if (*fu_build) return cmd_fu_build(m, dspec, flag_literal);
        if (*fu_embed) return cmd_fu_embed(path, m, dspec);
        if (*enumerate) return cmd_enumerate(m, dspec);
        if (*cu_embed) return cmd_cu_embed(path);
        if (*pu_build) return cmd_pu_build(n);
        if (*pu_embed) return cmd_pu_embed(path);
        if (*union_build) return cmd_union_build(paths);
        if (*union_witness) return cmd_union_witness(path, scale);
        if (*union_bounded) return cmd_union_bounded(path, ids);
        if (*splice) return cmd_splice(base_path, fiber_args, section_args);
        if (*group_embed) return cmd_group_embed(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
