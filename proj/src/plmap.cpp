#include "arclimit/plmap.hpp"

#include "arclimit/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace arclimit {

namespace {

// Merge consecutive collinear segments in place. Endpoints are never dropped.
std::vector<Breakpoint> canonicalize(std::vector<Breakpoint> pts) {
    if (pts.size() < 3) return pts;
    std::vector<Breakpoint> out;
    out.reserve(pts.size());
    out.push_back(pts.front());
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const Breakpoint& a = out.back();
        const Breakpoint& b = pts[i];
        const Breakpoint& c = pts[i + 1];
        // b lies on segment a-c iff (b.y-a.y)*(c.x-b.x) == (c.y-b.y)*(b.x-a.x)
        if ((b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x)) continue;
        out.push_back(b);
    }
    out.push_back(pts.back());
    return out;
}

// Index of the segment [x_i, x_{i+1}] containing x (leftmost on ties).
std::size_t segment_index(const std::vector<Breakpoint>& pts, const Rational& x) {
    std::size_t lo = 0, hi = pts.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (pts[mid].x <= x) lo = mid; else hi = mid;
    }
    return lo;
}

Rational eval_on_segment(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
    if (x == a.x) return a.y;
    if (x == b.x) return b.y;
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

void merge_into(std::vector<IntervalQ>& acc, const IntervalQ& piece) {
    if (!acc.empty() && piece.lo <= acc.back().hi) {
        if (piece.hi > acc.back().hi) acc.back() = IntervalQ(acc.back().lo, piece.hi);
        return;
    }
    acc.push_back(piece);
}

} // namespace

PLMap make_plmap(std::vector<std::pair<Rational, Rational>> points) {
    if (points.empty()) throw NotAnchored("empty breakpoint list");
    std::vector<Breakpoint> pts;
    pts.reserve(points.size());
    for (auto& p : points) pts.push_back({std::move(p.first), std::move(p.second)});
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i - 1].x >= pts[i].x)
            throw NotSorted("breakpoint x-coordinates must be strictly increasing");
    if (pts.front().x != Rational(0) || pts.back().x != Rational(1))
        throw NotAnchored("breakpoints must start at x=0 and end at x=1");
    for (const auto& p : pts)
        if (p.y < Rational(0) || p.y > Rational(1))
            throw OutOfRange("breakpoint value outside [0,1]: " + p.y.str());
    return PLMap(canonicalize(std::move(pts)));
}

std::string PLMap::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) s += ", ";
        s += "(" + pts_[i].x.str() + ", " + pts_[i].y.str() + ")";
    }
    return s + "}";
}

Rational eval(const PLMap& f, const Rational& x) {
    if (x < Rational(0) || x > Rational(1))
        throw DomainError("eval outside [0,1]: " + x.str());
    const auto& pts = f.breakpoints();
    std::size_t i = segment_index(pts, x);
    return eval_on_segment(pts[i], pts[i + 1], x);
}

PLMap compose(const PLMap& outer, const PLMap& inner, std::size_t budget) {
    const auto& in = inner.breakpoints();
    const auto& out = outer.breakpoints();
    std::vector<Rational> xs;
    xs.reserve(in.size() * 2);
    for (const auto& p : in) xs.push_back(p.x);
    // subdivide each inner segment at preimages of the outer breakpoints
    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
        const Breakpoint& a = in[i];
        const Breakpoint& b = in[i + 1];
        if (a.y == b.y) continue;
        Rational lo = min(a.y, b.y), hi = max(a.y, b.y);
        for (const auto& q : out) {
            if (q.x <= lo || q.x >= hi) continue;
            xs.push_back(a.x + (q.x - a.y) * (b.x - a.x) / (b.y - a.y));
        }
        if (xs.size() > 4 * budget) throw BudgetExceeded("composition subdivision exceeds budget");
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() > budget)
        throw BudgetExceeded("composition breakpoint count " + std::to_string(xs.size()) +
                             " exceeds budget " + std::to_string(budget));
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.emplace_back(x, eval(outer, eval(inner, x)));
    return make_plmap(std::move(pts));
}

PLMap iterate(const PLMap& f, unsigned k, std::size_t budget) {
    if (k < 1) throw DomainError("iterate requires k >= 1");
    PLMap g = f;
    for (unsigned i = 1; i < k; ++i) g = compose(f, g, budget);
    return g;
}

IntervalQ image(const PLMap& f, const IntervalQ& I) {
    const auto& pts = f.breakpoints();
    Rational lo = eval(f, I.lo), hi = lo;
    auto take = [&](const Rational& y) {
        if (y < lo) lo = y;
        if (y > hi) hi = y;
    };
    take(eval(f, I.hi));
    for (const auto& p : pts)
        if (I.lo < p.x && p.x < I.hi) take(p.y);
    return IntervalQ(lo, hi);
}

std::vector<IntervalQ> preimage_components(const PLMap& f, const IntervalQ& I) {
    const auto& pts = f.breakpoints();
    std::vector<IntervalQ> acc;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Breakpoint& a = pts[i];
        const Breakpoint& b = pts[i + 1];
        Rational ylo = min(a.y, b.y), yhi = max(a.y, b.y);
        if (yhi < I.lo || ylo > I.hi) continue;
        if (a.y == b.y) {
            merge_into(acc, IntervalQ(a.x, b.x));
            continue;
        }
        // invert the affine piece onto [I.lo, I.hi], clamp to the segment
        Rational u = a.x + (max(I.lo, ylo) - a.y) * (b.x - a.x) / (b.y - a.y);
        Rational v = a.x + (min(I.hi, yhi) - a.y) * (b.x - a.x) / (b.y - a.y);
        merge_into(acc, IntervalQ::hull_of(u, v));
    }
    return acc;
}

std::vector<Lap> laps(const PLMap& f) {
    const auto& pts = f.breakpoints();
    std::vector<Lap> out;
    auto dir_of = [](const Breakpoint& a, const Breakpoint& b) {
        if (a.y < b.y) return Direction::increasing;
        if (a.y > b.y) return Direction::decreasing;
        return Direction::constant;
    };
    std::size_t start = 0;
    Direction cur = dir_of(pts[0], pts[1]);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        Direction d = dir_of(pts[i], pts[i + 1]);
        if (d != cur) {
            out.push_back({IntervalQ(pts[start].x, pts[i].x), cur});
            start = i;
            cur = d;
        }
    }
    out.push_back({IntervalQ(pts[start].x, pts.back().x), cur});
    return out;
}

bool is_surjective(const PLMap& f) {
    return image(f, unit_interval()) == unit_interval();
}

std::vector<IntervalQ> preimage_of_point(const PLMap& f, const Rational& y) {
    return preimage_components(f, IntervalQ(y, y));
}

// --- plmap v1 I/O ------------------------------------------------------------

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rational parse_strict_fraction(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos)
        throw ParseError("expected <num>/<den>, got: " + tok);
    Rational r = Rational::parse(tok);
    // the file must already be in lowest terms with positive denominator
    if (r.str() != tok) throw ParseError("fraction not canonical: " + tok);
    return r;
}

} // namespace

PLMap read_plmap(std::istream& in) {
    std::string line;
    bool header_seen = false;
    std::vector<std::pair<Rational, Rational>> pts;
    while (std::getline(in, line)) {
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (!header_seen) {
            std::string word, ver;
            ls >> word >> ver;
            if (word != "plmap" || ver != "v1")
                throw ParseError("expected header 'plmap v1'");
            header_seen = true;
            continue;
        }
        std::string xs, ys, extra;
        ls >> xs >> ys;
        if (ys.empty()) throw ParseError("breakpoint line needs two fractions: " + line);
        if (ls >> extra) throw ParseError("trailing tokens on breakpoint line: " + line);
        pts.emplace_back(parse_strict_fraction(xs), parse_strict_fraction(ys));
    }
    if (!header_seen) throw ParseError("missing 'plmap v1' header");
    PLMap f = make_plmap(pts);
    if (f.size() != pts.size())
        throw ParseError("breakpoints not canonical (collinear segments present)");
    return f;
}

PLMap read_plmap_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file: " + path);
    return read_plmap(in);
}

void write_plmap(std::ostream& out, const PLMap& f) {
    out << "plmap v1\n";
    for (const auto& p : f.breakpoints()) out << p.x.str() << " " << p.y.str() << "\n";
}

std::string plmap_to_string(const PLMap& f) {
    std::ostringstream os;
    write_plmap(os, f);
    return os.str();
}

} // namespace arclimit
