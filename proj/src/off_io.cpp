#include "equilib/off_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "equilib/errors.hpp"

namespace equilib {

namespace {

struct TokenStream {
    explicit TokenStream(std::istream& in) : in_(in) {}

    // Next whitespace-separated token; '#' starts a comment to end of line.
    bool next(std::string& tok) {
        while (true) {
            if (pos_ >= line_.size()) {
                if (!std::getline(in_, line_)) return false;
                ++line_no_;
                pos_ = 0;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(line_[pos_]))) {
                ++pos_;
                continue;
            }
            if (line_[pos_] == '#') {
                pos_ = line_.size();
                continue;
            }
            size_t start = pos_;
            while (pos_ < line_.size() &&
                   !std::isspace(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            tok = line_.substr(start, pos_ - start);
            col_ = static_cast<int>(start) + 1;
            return true;
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_no_, col_);
    }

    long integer(const std::string& what) {
        std::string tok;
        if (!next(tok)) fail("unexpected end of file, expected " + what);
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (...) {
            fail("expected " + what + ", got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected " + what + ", got '" + tok + "'");
        return v;
    }

    double real(const std::string& what) {
        std::string tok;
        if (!next(tok)) fail("unexpected end of file, expected " + what);
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (...) {
            fail("expected " + what + ", got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected " + what + ", got '" + tok + "'");
        return v;
    }

    std::istream& in_;
    std::string line_;
    size_t pos_ = 0;
    int line_no_ = 0;
    int col_ = 1;
};

}  // namespace

ConvexPolyhedron read_off(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    TokenStream ts(in);

    std::string tok;
    if (!ts.next(tok)) ts.fail("empty file");
    if (tok != "OFF") ts.fail("expected OFF header");

    long nv = ts.integer("vertex count");
    long nf = ts.integer("face count");
    long ne = ts.integer("edge count");
    if (nv < 4 || nf < 4 || ne < 0) ts.fail("implausible counts line");

    std::vector<Vec3> vertices;
    vertices.reserve(nv);
    for (long i = 0; i < nv; ++i) {
        double x = ts.real("x coordinate");
        double y = ts.real("y coordinate");
        double z = ts.real("z coordinate");
        vertices.push_back({x, y, z});
    }

    std::vector<std::vector<int>> faces;
    faces.reserve(nf);
    for (long i = 0; i < nf; ++i) {
        long cnt = ts.integer("face vertex count");
        if (cnt < 3) ts.fail("face needs at least 3 vertices");
        std::vector<int> cyc;
        for (long j = 0; j < cnt; ++j) {
            long vi = ts.integer("vertex index");
            if (vi < 0 || vi >= nv) ts.fail("vertex index out of range");
            cyc.push_back(static_cast<int>(vi));
        }
        faces.push_back(std::move(cyc));
    }

    // Orient outward: a convex body sees every face from its vertex mean.
    Vec3 mean;
    for (const Vec3& v : vertices) mean += v;
    mean = mean / static_cast<double>(vertices.size());
    for (auto& cyc : faces) {
        Plane pl;
        try {
            pl = polygon_plane(vertices, cyc);
        } catch (const DegenerateGeometry& e) {
            throw DegenerateGeometry(std::string("face ") + e.what());
        }
        if (pl.signed_distance(mean) > 0) std::reverse(cyc.begin(), cyc.end());
    }

    ConvexPolyhedron poly = make_polyhedron(std::move(vertices), std::move(faces),
                                            /*merge=*/true);
    std::vector<std::string> violations = validate(poly);
    for (const std::string& v : violations)
        if (v.find("outside face") != std::string::npos) throw NotConvex(v);
    if (!violations.empty()) throw DegenerateGeometry(violations.front());
    return poly;
}

void write_off(const ConvexPolyhedron& poly, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "OFF\n"
        << poly.vertex_count() << ' ' << poly.face_count() << ' ' << poly.edge_count()
        << '\n';
    char buf[96];
    for (const Vec3& v : poly.vertices) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& cyc : poly.faces) {
        out << cyc.size();
        for (int vi : cyc) out << ' ' << vi;
        out << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

void write_obj(const ConvexPolyhedron& poly, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    char buf[96];
    for (const Vec3& v : poly.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& cyc : poly.faces) {
        out << 'f';
        for (int vi : cyc) out << ' ' << (vi + 1);
        out << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace equilib
