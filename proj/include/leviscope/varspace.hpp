#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leviscope/errors.hpp"

namespace leviscope {

using VarIndex = unsigned;

/// An ordered list of distinct variable names, optionally with a
/// fixed-point-free involution pairing holomorphic variables with their
/// conjugate partners. The list order is the variable precedence used by
/// every monomial order (earlier name = larger variable).
class VarSpace {
public:
    /// Space with no conjugation structure (germ spaces, complexified spaces).
    static std::shared_ptr<const VarSpace> plain(std::vector<std::string> names);

    /// Conjugate-paired space over the given holomorphic names. Partners are
    /// appended after the holomorphic block and named with a '~' prefix.
    static std::shared_ptr<const VarSpace> paired(std::vector<std::string> holo_names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(VarIndex v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<VarIndex> find(const std::string& name) const;

    bool has_pairing() const { return paired_count_ > 0; }
    std::size_t holo_count() const { return paired_count_ ? paired_count_ : names_.size(); }

    /// Partner under the conjugation involution, if this space is paired.
    std::optional<VarIndex> partner(VarIndex v) const;

    /// True when v is a conjugate slot (the '~' half of a paired space).
    bool is_conjugate_slot(VarIndex v) const {
        return paired_count_ > 0 && v >= paired_count_;
    }

    bool operator==(const VarSpace& o) const {
        return names_ == o.names_ && paired_count_ == o.paired_count_;
    }

private:
    std::vector<std::string> names_;
    std::size_t paired_count_ = 0;  // 0 = plain; else number of holomorphic slots
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

inline bool same_space(const VarSpacePtr& a, const VarSpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_space(const VarSpacePtr& a, const VarSpacePtr& b,
                               const char* where) {
    if (!same_space(a, b))
        throw space_mismatch_error(std::string(where) + ": operands live in different variable spaces");
}

}  // namespace leviscope
