#include "semitrans/tools/svg.hpp"

#include <sstream>

#include "semitrans/tangency.hpp"

namespace semitrans::tools {

std::vector<Vec2> sphere_polyline(const NormModel& model) {
    const auto c = model.cache();
    std::vector<Vec2> out(c.begin(), c.end());
    out.push_back(c.front());
    return out;
}

namespace {

std::string points(const std::vector<Vec2>& pts) {
    std::ostringstream os;
    os.precision(9);
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << pts[i].x << ',' << pts[i].y;
    return os.str();
}

void polyline(std::ostream& os, const std::vector<Vec2>& pts, const char* colour, double width) {
    os << "    <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << width << "\" points=\"" << points(pts)
       << "\"/>\n";
}

void circle(std::ostream& os, const Disc& d, const char* colour) {
    os << "    <circle cx=\"" << d.center.x << "\" cy=\"" << d.center.y << "\" r=\"" << d.radius << "\" fill=\"none\" stroke=\""
       << colour << "\" stroke-width=\"0.006\"/>\n";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

std::vector<Vec2> ellipse_points(const Ellipse& e) {
    std::vector<Vec2> pts;
    for (int i = 0; i <= 256; ++i) pts.push_back(e.boundary(kTwoPi * i / 256));
    return pts;
}

}  // namespace

std::string render_svg(const NormModel& model, const SvgOptions& options) {
    std::ostringstream os;
    os.precision(9);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.6 -1.6 3.2 3.2\" width=\"640\" height=\"640\">\n"
       << "  <title>" << escape(model.label()) << "</title>\n"
       << "  <g transform=\"scale(1,-1)\">\n"
       << "    <line x1=\"-1.6\" y1=\"0\" x2=\"1.6\" y2=\"0\" stroke=\"#bbb\" stroke-width=\"0.004\"/>\n"
       << "    <line x1=\"0\" y1=\"-1.6\" x2=\"0\" y2=\"1.6\" stroke=\"#bbb\" stroke-width=\"0.004\"/>\n";
    const auto sphere = sphere_polyline(model);
    for (const LinearMap2& L : options.images) {
        std::vector<Vec2> img;
        for (Vec2 p : sphere) img.push_back(L(p));
        polyline(os, img, "blue", 0.008);
    }
    for (double t : options.thetas) {
        const SpherePoint x = model.sphere_point(t);
        if (options.overlay == Overlay::Discs) {
            if (const auto d = inner_disc(model, x)) circle(os, *d, "green");
            if (const auto d = outer_disc(model, x)) circle(os, *d, "red");
        } else if (options.overlay == Overlay::Ellipses) {
            if (const auto e = inner_ellipse(model, x)) polyline(os, ellipse_points(*e), "green", 0.006);
            if (const auto e = outer_ellipse(model, x)) polyline(os, ellipse_points(*e), "red", 0.006);
        }
        if (options.overlay != Overlay::None)
            os << "    <circle cx=\"" << x.point.x << "\" cy=\"" << x.point.y << "\" r=\"0.02\" fill=\"black\"/>\n";
    }
    polyline(os, sphere, "black", 0.01);
    os << "  </g>\n</svg>\n";
    return os.str();
}

}  // namespace semitrans::tools
