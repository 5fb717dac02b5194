#include "automult/dfao_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "automult/error.hpp"

namespace automult {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "automult.dfao/1";

}  // namespace

std::string dfao_to_string(const Dfao& d) {
    auto errors = validate(d).errors;
    // Structural problems only; output-stability warnings do not block IO.
    for (const auto& e : errors)
        if (e.rfind("leading-zero", 0) != 0) throw Error("bad-dfao", e);

    ordered_json doc;
    doc["format"] = kFormatTag;
    doc["base"] = d.base;
    doc["states"] = d.state_names;
    doc["initial"] = d.state_names.at(d.initial);
    ordered_json delta = ordered_json::object();
    for (int s = 0; s < d.size(); ++s) {
        ordered_json row = ordered_json::object();
        for (int c = 0; c < d.base; ++c) row[std::to_string(c)] = d.state_names.at(d.delta[s][c]);
        delta[d.state_names[s]] = std::move(row);
    }
    doc["delta"] = std::move(delta);
    ordered_json output = ordered_json::object();
    for (int s = 0; s < d.size(); ++s) output[d.state_names[s]] = d.output[s].str();
    doc["output"] = std::move(output);
    return doc.dump(2) + "\n";
}

Dfao dfao_from_string(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error("parse", e.what());
    }
    try {
        if (!doc.is_object() || doc.at("format").get<std::string>() != kFormatTag)
            throw Error("parse", "missing or unknown format tag");
        Dfao d;
        d.base = doc.at("base").get<int>();
        if (d.base < 2) throw Error("bad-dfao", "base must be >= 2");
        d.state_names = doc.at("states").get<std::vector<std::string>>();
        if (d.state_names.empty()) throw Error("bad-dfao", "state list is empty");
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < d.state_names.size(); ++i) {
            if (!index.emplace(d.state_names[i], static_cast<int>(i)).second)
                throw Error("bad-dfao", "duplicate state name " + d.state_names[i]);
        }
        auto lookup = [&](const std::string& name) {
            auto it = index.find(name);
            if (it == index.end()) throw Error("bad-dfao", "unknown state name " + name);
            return it->second;
        };
        d.initial = lookup(doc.at("initial").get<std::string>());
        const auto& delta = doc.at("delta");
        const auto& output = doc.at("output");
        for (const std::string& name : d.state_names) {
            const auto& row = delta.at(name);
            std::vector<int> targets(d.base, 0);
            if (row.size() != static_cast<std::size_t>(d.base))
                throw Error("bad-dfao", "state " + name + " must map every digit");
            for (int c = 0; c < d.base; ++c)
                targets[c] = lookup(row.at(std::to_string(c)).get<std::string>());
            d.delta.push_back(std::move(targets));
            d.output.push_back(Value::parse(output.at(name).get<std::string>()));
        }
        return d;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("parse", e.what());
    }
}

Dfao load_dfao(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return dfao_from_string(buf.str());
}

void save_dfao(const Dfao& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << dfao_to_string(d);
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string dfao_hash(const Dfao& d) {
    std::uint64_t h = fnv1a64(dfao_to_string(d));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace automult
