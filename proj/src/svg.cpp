#include "tracklab/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "tracklab/classify.hpp"

namespace tracklab {

namespace {

constexpr double kScale = 50.0;
constexpr double kMargin = 30.0;
constexpr double kPanelWidth = 10.0 * kScale + 2 * kMargin;
constexpr double kPanelHeight = 4.0 * kScale + 2 * kMargin + 20.0;

const char* const kPalette[] = {"#c0392b", "#2471a3", "#229954", "#b9770e",
                                "#7d3c98", "#17a589", "#566573", "#d35400"};

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

NetPoint corner(char name, double dx) {
  switch (name) {
    case 'u': return {dx + 0, 0};
    case 'v': return {dx + 0, 4};
    case 'z': return {dx + 4, 4};
    default: return {dx + 4, 0};  // w
  }
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

NetLayout NetLayout::tetra() {
  const auto& c = *tetrahedron();
  NetLayout net;
  for (int t = 0; t < 4; ++t) {
    const auto& tri = c.triangle(t);
    // uvz and uwz share the left square's diagonal uz.
    double dx = (tri.id == "uvz" || tri.id == "uwz") ? 0.0 : 6.0;
    for (int i = 0; i < 3; ++i) net.corners[t][i] = corner(c.vertices()[tri.vertices[i]][0], dx);
  }
  return net;
}

NetPoint NetLayout::vertex(int triangle, int v) const {
  const auto& tri = tetrahedron()->triangle(triangle);
  for (int i = 0; i < 3; ++i) {
    if (tri.vertices[i] == v) return corners[triangle][i];
  }
  return {};
}

NetPoint point_position(const NetLayout& net, const SingularState& s, int triangle, int id) {
  const auto& e = s.complex().edge(s.point(id).edge);
  NetPoint a = net.vertex(triangle, e.vertices[0]), b = net.vertex(triangle, e.vertices[1]);
  double f = (s.position(id) + 1.0) / (static_cast<double>(s.points_on(s.point(id).edge).size()) + 1.0);
  return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

std::string render_svg(const std::vector<std::pair<std::string, SingularState>>& panels) {
  const NetLayout net = NetLayout::tetra();
  std::ostringstream os;
  const double width = kPanelWidth * static_cast<double>(std::max<std::size_t>(1, panels.size()));
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(kPanelHeight) << "\" viewBox=\"0 0 " << num(width) << " " << num(kPanelHeight) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const auto& [title, s] = panels[p];
    if (!s.complex().is_tetrahedron()) {
      throw Error(ErrorKind::ComplexMismatch, "the net drawing only covers the tetrahedron T");
    }
    const auto& c = s.complex();
    const double ox = kPanelWidth * static_cast<double>(p);
    auto X = [&](const NetPoint& q) { return num(ox + kMargin + q.x * kScale); };
    auto Y = [&](const NetPoint& q) { return num(kMargin + 20.0 + (4.0 - q.y) * kScale); };
    os << "<g id=\"panel" << p << "\">\n";
    if (!title.empty()) {
      os << "<text x=\"" << num(ox + kMargin) << "\" y=\"" << num(kMargin) << "\" font-family=\"sans-serif\" font-size=\"14\">"
         << escape(title) << "</text>\n";
    }
    // Net edges.
    for (int t = 0; t < c.num_triangles(); ++t) {
      const auto& k = net.corners[t];
      os << "<polygon points=\"" << X(k[0]) << "," << Y(k[0]) << " " << X(k[1]) << "," << Y(k[1]) << " "
         << X(k[2]) << "," << Y(k[2]) << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    }
    // Vertex and centre labels.
    for (int t = 0; t < c.num_triangles(); ++t) {
      const auto& tri = c.triangle(t);
      NetPoint mid{};
      for (int i = 0; i < 3; ++i) {
        const auto& q = net.corners[t][i];
        mid.x += q.x / 3.0;
        mid.y += q.y / 3.0;
        os << "<text x=\"" << X(q) << "\" y=\"" << Y(q) << "\" font-family=\"sans-serif\" font-size=\"12\" dx=\"-12\" dy=\"4\">"
           << c.vertices()[tri.vertices[i]] << "</text>\n";
      }
      os << "<text x=\"" << X(mid) << "\" y=\"" << Y(mid) << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#999\">"
         << centre_name(c, t) << "</text>\n";
    }
    // Lines coloured by component.
    std::vector<int> colour(s.num_points(), 0);
    auto comps = decompose(s);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (int id : comps[i].cycle) colour[id] = static_cast<int>(i % 8);
    }
    for (int t = 0; t < c.num_triangles(); ++t) {
      NetPoint mid{};
      for (const auto& q : net.corners[t]) {
        mid.x += q.x / 3.0;
        mid.y += q.y / 3.0;
      }
      for (const auto& l : s.lines(t)) {
        NetPoint a = point_position(net, s, t, l.a), b = point_position(net, s, t, l.b);
        const char* col = kPalette[colour[l.a]];
        if (s.point(l.a).edge == s.point(l.b).edge) {
          // A returning arc bends into its triangle.
          NetPoint ctl{(a.x + b.x) / 2 * 0.6 + mid.x * 0.4, (a.y + b.y) / 2 * 0.6 + mid.y * 0.4};
          os << "<path d=\"M " << X(a) << " " << Y(a) << " Q " << X(ctl) << " " << Y(ctl) << " " << X(b) << " "
             << Y(b) << "\" fill=\"none\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n";
        } else {
          os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b)
             << "\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n";
        }
      }
    }
    // Points on every drawn copy of their edge.
    for (int t = 0; t < c.num_triangles(); ++t) {
      for (int slot = 0; slot < 3; ++slot) {
        const int e = c.triangle(t).edges[slot];
        for (int id : s.points_on(e)) {
          NetPoint q = point_position(net, s, t, id);
          os << "<circle cx=\"" << X(q) << "\" cy=\"" << Y(q) << "\" r=\"3\" fill=\"" << kPalette[colour[id]]
             << "\"><title>" << escape(s.point(id).name) << "</title></circle>\n";
        }
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const SingularState& s) { return render_svg({{std::string(), s}}); }

}  // namespace tracklab
