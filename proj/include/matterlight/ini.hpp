#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matterlight/types.hpp"

namespace mlt {

/// Sectioned key/value text document. Unknown keys are hard errors: consumers
/// take() every key they understand and then call finish(), which rejects
/// anything left over.
class IniSection {
  public:
    IniSection() = default;
    IniSection(std::string name, std::map<std::string, std::string> kv)
        : name_(std::move(name)), kv_(std::move(kv)) {}

    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    std::string take(const std::string& key) {
        auto it = kv_.find(key);
        if (it == kv_.end())
            throw ConfigError("missing key '" + key + "' in section [" + name_ + "]");
        std::string v = it->second;
        kv_.erase(it);
        return v;
    }

    std::string take_or(const std::string& key, const std::string& fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        std::string v = it->second;
        kv_.erase(it);
        return v;
    }

    double take_double(const std::string& key) { return to_double(key, take(key)); }
    double take_double_or(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        return to_double(key, take(key));
    }
    long take_long_or(const std::string& key, long fallback) {
        if (!has(key)) return fallback;
        std::string v = take(key);
        try {
            size_t pos = 0;
            long r = std::stol(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "' in [" + name_ + "]: not an integer: '" + v + "'");
        }
    }
    bool take_bool_or(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        std::string v = take(key);
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw ConfigError("key '" + key + "' in [" + name_ + "]: not a boolean: '" + v + "'");
    }
    std::vector<double> take_double_list_or(const std::string& key) {
        std::vector<double> out;
        if (!has(key)) return out;
        std::istringstream ss(take(key));
        std::string tok;
        while (ss >> tok) out.push_back(to_double(key, tok));
        return out;
    }

    void finish() const {
        if (!kv_.empty())
            throw ConfigError("unknown key '" + kv_.begin()->first + "' in section [" + name_ + "]");
    }

    const std::string& name() const { return name_; }

  private:
    double to_double(const std::string& key, const std::string& v) const {
        try {
            size_t pos = 0;
            double r = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw ConfigError("key '" + key + "' in [" + name_ + "]: not a number: '" + v + "'");
        }
    }

    std::string name_;
    std::map<std::string, std::string> kv_;
};

class IniDoc {
  public:
    static IniDoc parse_string(const std::string& text, const std::string& origin = "<string>");
    static IniDoc parse_file(const std::string& path);

    bool has_section(const std::string& name) const { return sections_.count(name) > 0; }

    IniSection section(const std::string& name) const {
        auto it = sections_.find(name);
        if (it == sections_.end())
            throw ConfigError(origin_ + ": missing section [" + name + "]");
        return IniSection(name, it->second);
    }

    IniSection section_or_empty(const std::string& name) const {
        auto it = sections_.find(name);
        if (it == sections_.end()) return IniSection(name, {});
        return IniSection(name, it->second);
    }

    std::vector<std::string> section_names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : sections_) out.push_back(k);
        return out;
    }

    /// Reject any section that is not in the allowed set.
    void restrict_sections(const std::set<std::string>& allowed) const {
        for (const auto& [name, kv] : sections_)
            if (!allowed.count(name))
                throw ConfigError(origin_ + ": unknown section [" + name + "]");
    }

    const std::string& origin() const { return origin_; }

  private:
    std::string origin_;
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace mlt
