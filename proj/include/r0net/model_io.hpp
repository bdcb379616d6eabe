#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "r0net/errors.hpp"
#include "r0net/eval.hpp"

namespace r0net {

/// FNV-1a 64-bit digest, hex encoded. Used to stamp outputs with the
/// configuration that produced them.
inline std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline nlohmann::json model_to_json(const TrainedModel& model,
                                    const std::map<std::string, std::string>& provenance = {}) {
    nlohmann::json j;
    j["format"] = "r0net-model/1";
    j["feature_names"] = model.feature_names;
    if (!provenance.empty())
        j["provenance"] = provenance;
    switch (model.kind) {
    case ModelKind::linear:
        j["model"] = "linear";
        j["linear"]["weights"] = model.linear.weights;
        break;
    case ModelKind::svr: {
        j["model"] = std::string("svr-") + kernel_name(model.svr.kernel.kind);
        nlohmann::json& s = j["svr"];
        s["kernel"] = {{"kind", kernel_name(model.svr.kernel.kind)},
                       {"gamma", model.svr.kernel.gamma},
                       {"degree", model.svr.kernel.degree},
                       {"coef0", model.svr.kernel.coef0}};
        s["C"] = model.svr.C;
        s["epsilon"] = model.svr.epsilon;
        s["bias"] = model.svr.bias;
        s["converged"] = model.svr.converged;
        s["iterations"] = model.svr.iterations;
        s["coefs"] = model.svr.coefs;
        s["support_vectors"] = model.svr.support_vectors;
        break;
    }
    case ModelKind::ann: {
        j["model"] = "ann";
        nlohmann::json& a = j["ann"];
        a["input_dim"] = model.ann.input_dim;
        a["hidden_dim"] = model.ann.hidden_dim;
        a["w1"] = model.ann.w1;
        a["b1"] = model.ann.b1;
        a["w2"] = model.ann.w2;
        a["b2"] = model.ann.b2;
        break;
    }
    }
    return j;
}

inline TrainedModel model_from_json(const nlohmann::json& j,
                                    std::map<std::string, std::string>* provenance = nullptr) {
    try {
        if (j.at("format").get<std::string>() != "r0net-model/1")
            throw ParseError("unsupported model format");
        TrainedModel model;
        model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        if (provenance && j.contains("provenance"))
            *provenance = j["provenance"].get<std::map<std::string, std::string>>();
        const std::string name = j.at("model").get<std::string>();
        if (name == "linear") {
            model.kind = ModelKind::linear;
            model.linear.weights = j.at("linear").at("weights").get<std::vector<double>>();
            if (model.linear.weights.size() != model.feature_names.size() + 1)
                throw ParseError("linear weight count does not match feature names");
        } else if (name.rfind("svr-", 0) == 0) {
            model.kind = ModelKind::svr;
            const nlohmann::json& s = j.at("svr");
            const nlohmann::json& k = s.at("kernel");
            model.svr.kernel.kind = kernel_from_name(k.at("kind").get<std::string>());
            model.svr.kernel.gamma = k.at("gamma").get<double>();
            model.svr.kernel.degree = k.at("degree").get<int>();
            model.svr.kernel.coef0 = k.at("coef0").get<double>();
            model.svr.C = s.at("C").get<double>();
            model.svr.epsilon = s.at("epsilon").get<double>();
            model.svr.bias = s.at("bias").get<double>();
            model.svr.converged = s.at("converged").get<bool>();
            model.svr.iterations = s.at("iterations").get<long>();
            model.svr.coefs = s.at("coefs").get<std::vector<double>>();
            model.svr.support_vectors =
                s.at("support_vectors").get<std::vector<std::vector<double>>>();
            if (model.svr.coefs.size() != model.svr.support_vectors.size())
                throw ParseError("svr coefficient and support vector counts differ");
            for (const auto& sv : model.svr.support_vectors)
                if (sv.size() != model.feature_names.size())
                    throw ParseError("svr support vector dimension mismatch");
        } else if (name == "ann") {
            model.kind = ModelKind::ann;
            const nlohmann::json& a = j.at("ann");
            model.ann.input_dim = a.at("input_dim").get<int>();
            model.ann.hidden_dim = a.at("hidden_dim").get<int>();
            model.ann.w1 = a.at("w1").get<std::vector<double>>();
            model.ann.b1 = a.at("b1").get<std::vector<double>>();
            model.ann.w2 = a.at("w2").get<std::vector<double>>();
            model.ann.b2 = a.at("b2").get<double>();
            const std::size_t h = static_cast<std::size_t>(model.ann.hidden_dim);
            if (model.ann.input_dim != static_cast<int>(model.feature_names.size()) ||
                model.ann.w1.size() != h * model.feature_names.size() ||
                model.ann.b1.size() != h || model.ann.w2.size() != h)
                throw ParseError("ann layer shapes are inconsistent");
        } else {
            throw ParseError("unknown model kind: " + name);
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    }
}

inline void save_model(const TrainedModel& model, const std::string& path,
                       const std::map<std::string, std::string>& provenance = {}) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open for writing: " + path);
    out << model_to_json(model, provenance).dump(2) << '\n';
}

inline TrainedModel load_model(const std::string& path,
                               std::map<std::string, std::string>* provenance = nullptr) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    }
    return model_from_json(j, provenance);
}

} // namespace r0net
