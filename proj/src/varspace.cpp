#include "leviscope/varspace.hpp"

#include <set>

namespace leviscope {

namespace {
void check_distinct(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw domain_error("variable name may not be empty");
        if (!seen.insert(n).second)
            throw domain_error("duplicate variable name '" + n + "'");
    }
}
}  // namespace

std::shared_ptr<const VarSpace> VarSpace::plain(std::vector<std::string> names) {
    check_distinct(names);
    auto sp = std::make_shared<VarSpace>();
    sp->names_ = std::move(names);
    sp->paired_count_ = 0;
    return sp;
}

std::shared_ptr<const VarSpace> VarSpace::paired(std::vector<std::string> holo_names) {
    check_distinct(holo_names);
    auto sp = std::make_shared<VarSpace>();
    sp->paired_count_ = holo_names.size();
    sp->names_ = std::move(holo_names);
    for (std::size_t i = 0; i < sp->paired_count_; ++i)
        sp->names_.push_back("~" + sp->names_[i]);
    return sp;
}

std::optional<VarIndex> VarSpace::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<VarIndex>(i);
    return std::nullopt;
}

std::optional<VarIndex> VarSpace::partner(VarIndex v) const {
    if (paired_count_ == 0) return std::nullopt;
    if (v < paired_count_) return static_cast<VarIndex>(v + paired_count_);
    return static_cast<VarIndex>(v - paired_count_);
}

}  // namespace leviscope
