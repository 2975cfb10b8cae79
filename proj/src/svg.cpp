#include "tropext/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tropext {

SvgWindow SvgWindow::parse(std::string_view text)
{
    std::vector<Rational> v;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (v.size() != 4)
        throw std::invalid_argument("window needs four rationals xmin,ymin,xmax,ymax");
    SvgWindow w{v[0], v[1], v[2], v[3]};
    if (w.xmin >= w.xmax || w.ymin >= w.ymax)
        throw std::invalid_argument("window is empty");
    return w;
}

namespace {

using linalg::Constraint;
using linalg::Rel;

constexpr double kSize = 400.0;
constexpr double kMargin = 20.0;

double to_double(const Rational& q)
{
    return q.get_d();
}

struct Canvas {
    SvgWindow w;
    double sx, sy;

    explicit Canvas(const SvgWindow& win) : w(win)
    {
        sx = kSize / to_double(w.xmax - w.xmin);
        sy = kSize / to_double(w.ymax - w.ymin);
    }
    std::string pt(const QVec& p) const
    {
        char buf[64];
        double x = kMargin + to_double(p[0] - w.xmin) * sx;
        double y = kMargin + to_double(w.ymax - p[1]) * sy;
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", x, y);
        return buf;
    }
};

std::vector<Constraint> window_constraints(const SvgWindow& w)
{
    return {{{Rational(1), Rational(0)}, w.xmax, Rel::Le},
            {{Rational(-1), Rational(0)}, -w.xmin, Rel::Le},
            {{Rational(0), Rational(1)}, w.ymax, Rel::Le},
            {{Rational(0), Rational(-1)}, -w.ymin, Rel::Le}};
}

/// Vertices of a bounded polygon (or segment, or point) in the plane given by constraints.
std::vector<QVec> vertices(const std::vector<Constraint>& cons)
{
    std::vector<QVec> out;
    auto add = [&](QVec p) {
        for (const auto& c : cons)
            if (!linalg::satisfies(c, p))
                return;
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(std::move(p));
    };
    for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
            const auto& a = cons[i].a;
            const auto& b = cons[j].a;
            Rational det = a[0] * b[1] - a[1] * b[0];
            if (det == 0)
                continue;
            add({(cons[i].b * b[1] - cons[j].b * a[1]) / det, (a[0] * cons[j].b - b[0] * cons[i].b) / det});
        }
    if (out.size() > 2) {
        QVec c{Rational(0), Rational(0)};
        for (const auto& p : out) {
            c[0] += p[0];
            c[1] += p[1];
        }
        c[0] /= static_cast<long>(out.size());
        c[1] /= static_cast<long>(out.size());
        std::sort(out.begin(), out.end(), [&](const QVec& p, const QVec& q) {
            return std::atan2(to_double(p[1] - c[1]), to_double(p[0] - c[0])) <
                   std::atan2(to_double(q[1] - c[1]), to_double(q[0] - c[0]));
        });
    }
    return out;
}

bool continues(const Cell& cell, const QVec& from, const QVec& to)
{
    QVec beyond{to[0] + (to[0] - from[0]) / 1000, to[1] + (to[1] - from[1]) / 1000};
    return cell.contains(beyond);
}

} // namespace

std::string render_svg(const PolyhedralComplex& c, const SvgWindow& window)
{
    if (c.ambient_dim != 2)
        throw DomainError("SVG rendering needs a complex in a rank-2 lattice");
    Canvas cv(window);
    std::ostringstream os;
    const double full = kSize + 2 * kMargin;
    const Rational zero(0);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full
       << "\" viewBox=\"0 0 " << full << " " << full << "\">\n";
    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" "
          "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f4e79\"/></marker></defs>\n";
    os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" fill=\"white\" stroke=\"#999\"/>\n";
    auto line = [&](const QVec& a, const QVec& b, const std::string& attrs) {
        auto pa = cv.pt(a), pb = cv.pt(b);
        os << "<polyline points=\"" << pa << " " << pb << "\" " << attrs << "/>\n";
    };
    if (window.xmin <= zero && zero <= window.xmax)
        line({zero, window.ymin}, {zero, window.ymax}, "class=\"axis\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"");
    if (window.ymin <= zero && zero <= window.ymax)
        line({window.xmin, zero}, {window.xmax, zero}, "class=\"axis\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"");

    auto clipped = [&](const Cell& cell) {
        auto cons = cell.constraints();
        for (auto& w : window_constraints(window))
            cons.push_back(std::move(w));
        return vertices(cons);
    };

    // Two-cells first so edges and vertices sit on top.
    for (std::size_t pass = 3; pass-- > 0;) {
        for (const auto& cell : c.cells) {
            if (cell.dim != pass)
                continue;
            auto vs = clipped(cell);
            if (vs.empty())
                continue;
            if (pass == 2 && vs.size() >= 3) {
                os << "<polygon class=\"cell\" points=\"";
                for (std::size_t i = 0; i < vs.size(); ++i)
                    os << (i ? " " : "") << cv.pt(vs[i]);
                os << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
            } else if (pass == 1 && vs.size() == 2) {
                // Orient toward the end where the cell leaves the window.
                QVec a = vs[0], b = vs[1];
                bool fwd = continues(cell, a, b);
                bool back = continues(cell, b, a);
                if (back && !fwd)
                    std::swap(a, b);
                std::string attrs = "class=\"edge\" stroke=\"#1f4e79\" stroke-width=\"2\"";
                if (fwd || back) {
                    attrs += " marker-end=\"url(#arrow)\"";
                    if (fwd && back) {
                        QVec mid{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
                        line(mid, b, attrs);
                        line(mid, a, attrs);
                        continue;
                    }
                }
                line(a, b, attrs);
            } else if (pass == 0) {
                auto p = cv.pt(vs[0]);
                auto comma = p.find(',');
                os << "<circle class=\"vertex\" cx=\"" << p.substr(0, comma) << "\" cy=\"" << p.substr(comma + 1)
                   << "\" r=\"4\" fill=\"#08306b\"/>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace tropext
