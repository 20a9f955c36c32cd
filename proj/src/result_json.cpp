#include "disect/result_json.hpp"

#include <json.hpp>

namespace disect {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json inequalities_json(const Certificate& cert) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : cert.records) {
        ordered_json rec;
        rec["name"] = r.name;
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["pass"] = r.pass;
        rec["applicable"] = r.applicable;
        rec["required"] = r.required;
        if (!r.note.empty()) rec["note"] = r.note;
        arr.push_back(std::move(rec));
    }
    return arr;
}

ordered_json certificate_json(const Certificate& cert) {
    ordered_json c;
    c["epsilon"] = cert.epsilon;
    c["trials"] = cert.trials;
    c["seed"] = cert.seed;
    c["threads"] = cert.threads;
    c["strippedM"] = cert.m_stripped;
    if (cert.has_split) {
        c["theta"] = cert.theta;
        c["tau"] = cert.tau;
        c["tauStar"] = cert.tau_star;
        c["sigma"] = cert.sigma;
        c["alpha"] = cert.alpha;
        c["beta"] = cert.beta;
        c["b"] = cert.b;
        c["g"] = cert.g;
        c["delta1"] = cert.delta1;
        c["xSize"] = cert.x_size;
        c["ySize"] = cert.y_size;
        c["gapMode"] = cert.gap_mode;
        c["refinementMode"] = cert.refinement_mode;
        c["starBoundHolds"] = cert.star_bound_holds;
    } else {
        c["theta"] = nullptr;
        c["tau"] = nullptr;
        c["tauStar"] = nullptr;
        c["sigma"] = nullptr;
        c["alpha"] = nullptr;
        c["beta"] = nullptr;
        c["b"] = nullptr;
        c["g"] = nullptr;
        c["delta1"] = nullptr;
        c["xSize"] = nullptr;
        c["ySize"] = nullptr;
        c["gapMode"] = nullptr;
        c["refinementMode"] = nullptr;
        c["starBoundHolds"] = nullptr;
    }
    c["inequalities"] = inequalities_json(cert);
    c["achievedRatio"] = {{"originalM", cert.ratio_original},
                          {"strippedM", cert.ratio_stripped}};
    if (cert.has_split) {
        c["trialStats"] = {{"trials", cert.trial_stats.trials},
                           {"meanE12", cert.trial_stats.mean_e12},
                           {"meanE21", cert.trial_stats.mean_e21},
                           {"stdE12", cert.trial_stats.std_e12},
                           {"stdE21", cert.trial_stats.std_e21},
                           {"winningTrial", cert.trial_stats.winning_trial},
                           {"movedVertices", cert.trial_stats.moved_vertices}};
        c["expected"] = {{"e12", cert.expected.e12}, {"e21", cert.expected.e21}};
        c["matching"] = {{"edges", cert.matching.edges},
                         {"free", cert.matching.free},
                         {"nonfree", cert.matching.nonfree},
                         {"special", cert.matching.special}};
        c["components"] = {{"sizes", cert.components.sizes},
                           {"tight", cert.components.tight},
                           {"antiparallel", cert.components.antiparallel},
                           {"essential", cert.components.essential}};
    } else {
        c["trialStats"] = nullptr;
        c["expected"] = nullptr;
        c["matching"] = nullptr;
        c["components"] = nullptr;
    }
    c["allRequiredPass"] = cert.all_required_pass();
    c["warnings"] = cert.warnings;
    return c;
}

} // namespace

std::string result_json_text(const PartitionResult& res) {
    const Certificate& cert = res.certificate;
    ordered_json doc;
    doc["input"] = {{"n", cert.n}, {"m", cert.m_original}, {"d", cert.d}};
    doc["mode"] = cert.mode;
    doc["bisection"] = {{"part1", res.bisection.part1},
                        {"part2", res.bisection.part2}};
    doc["stats"] = {{"e12", res.bisection.stats.e12},
                    {"e21", res.bisection.stats.e21},
                    {"minDir", res.bisection.stats.min_dir()},
                    {"ratio", cert.ratio_original}};
    doc["certificate"] = certificate_json(cert);
    doc["rng"] = {{"seed", cert.seed}, {"trials", cert.trials}};
    return doc.dump(2) + "\n";
}

} // namespace disect
