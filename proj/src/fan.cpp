#include "tropext/fan.hpp"

#include <algorithm>

namespace tropext {

Fan::Fan(std::size_t rank, std::vector<Cone> cones, bool complete_faces) : rank_(rank)
{
    for (const auto& c : cones)
        if (c.ambient_rank() != rank)
            throw DomainError("cone rank does not match fan rank");
    if (!complete_faces) {
        cones_ = std::move(cones);
        return;
    }
    for (const auto& c : cones) {
        for (auto& f : faces(c)) {
            bool present = std::any_of(cones_.begin(), cones_.end(), [&](const Cone& x) { return x == f; });
            if (!present)
                cones_.push_back(std::move(f));
        }
    }
    std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
        if (a.dim() != b.dim())
            return a.dim() < b.dim();
        return a.generators() < b.generators();
    });
}

Fan Fan::affine_line()
{
    return Fan(1, {Cone(1, {{1}})});
}

Fan Fan::projective_line()
{
    return Fan(1, {Cone(1, {{1}}), Cone(1, {{-1}})});
}

Fan Fan::projective_plane()
{
    return Fan(2, {Cone(2, {{1, 0}, {0, 1}}), Cone(2, {{0, 1}, {-1, -1}}), Cone(2, {{-1, -1}, {1, 0}})});
}

Fan Fan::orthant(std::size_t rank)
{
    return Fan(rank, {Cone::orthant(rank)});
}

std::optional<std::size_t> Fan::find(const Cone& c) const
{
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i] == c)
            return i;
    return std::nullopt;
}

std::size_t Fan::index_of(const Cone& c) const
{
    auto i = find(c);
    if (!i)
        throw DomainError("cone is not in the fan");
    return *i;
}

std::size_t Fan::zero_index() const
{
    return index_of(Cone::zero(rank_));
}

bool operator==(const Fan& a, const Fan& b)
{
    if (a.rank_ != b.rank_ || a.cones_.size() != b.cones_.size())
        return false;
    for (std::size_t i = 0; i < a.cones_.size(); ++i)
        if (!(a.cones_[i] == b.cones_[i]))
            return false;
    return true;
}

FanReport fan_validate(const Fan& fan)
{
    FanReport report;
    const auto& cones = fan.cones();
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (cones[i].ambient_rank() != fan.rank()) {
            report.violations.push_back({FanViolation::Kind::WrongRank, i, i, "cone has wrong ambient rank"});
            continue;
        }
        for (const auto& f : faces(cones[i])) {
            if (!fan.find(f)) {
                report.violations.push_back({FanViolation::Kind::MissingFace, i, i,
                                             "a face of dimension " + std::to_string(f.dim()) + " is not in the fan"});
                break;
            }
        }
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            if (cones[i].ambient_rank() != fan.rank() || cones[j].ambient_rank() != fan.rank())
                continue;
            Cone meet = intersect(cones[i], cones[j]);
            if (!is_face(cones[i], meet) || !is_face(cones[j], meet))
                report.violations.push_back({FanViolation::Kind::BadIntersection, i, j,
                                             "intersection is not a common face"});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

Fan product_fan(const Fan& a, const Fan& b)
{
    std::vector<Cone> cones;
    for (const auto& x : a.cones())
        for (const auto& y : b.cones())
            cones.push_back(product_cone(x, y));
    return Fan(a.rank() + b.rank(), std::move(cones));
}

std::optional<std::size_t> smallest_containing(const Fan& target, const Cone& c)
{
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (!target.cone(i).contains(c))
            continue;
        if (!best || target.cone(i).dim() < target.cone(*best).dim())
            best = i;
    }
    return best;
}

FanMapCompatibility fan_map_compatible(const IntMatrix& a, const Fan& source, const Fan& target)
{
    if (a.size() != target.rank())
        throw DomainError("matrix row count does not match target rank");
    for (const auto& row : a)
        if (row.size() != source.rank())
            throw DomainError("matrix column count does not match source rank");
    FanMapCompatibility out;
    for (const auto& c : source.cones()) {
        auto img = image_cone(a, target.rank(), c);
        auto idx = smallest_containing(target, img);
        out.assignment.push_back(idx);
        if (!idx)
            out.compatible = false;
    }
    return out;
}

} // namespace tropext
