#ifndef SOFTDITO_TESTS_SUPPORT_HPP
#define SOFTDITO_TESTS_SUPPORT_HPP

#include <stdexcept>
#include <string>

#include "softdito/softdito.hpp"

namespace softdito::testing {

/// Parses one of the bundled sample specifications; a parse error aborts the test binary.
inline dsl::SpecDocument sample(const std::string& name) {
    auto r = dsl::parse_file(std::string(SOFTDITO_SAMPLES_DIR) + "/" + name);
    if (!r.ok()) {
        throw std::runtime_error(name + ": " + r.errors.front().to_string());
    }
    return std::move(r.document);
}

template<typename T_>
const T_& named(const std::vector<dsl::Decl<T_>>& v, std::string_view name) {
    for (const auto& d : v) {
        if (d.name == name) {
            return d.value;
        }
    }
    throw std::runtime_error("no declaration named " + std::string(name));
}

using Entries = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline SoftSet set_of(const ContextPtr& ctx, const Entries& e) { return SoftSet::from_labels(ctx, e); }

inline ParamSet params(const ContextPtr& ctx, const std::vector<std::string>& labels) { return ctx->param_set(labels); }

} // namespace softdito::testing

#endif
