#include <cmath>
#include <cstdio>
#include <sstream>

#include "lrk/error.hpp"
#include "lrk/json.hpp"
#include "lrk/puzzles.hpp"

namespace lrk {

namespace {

struct Point {
  double x;
  double y;
};

Point embed(Vertex v) { return {v.x + v.y / 2.0, v.y * std::sqrt(3.0) / 2.0}; }

std::vector<Vertex> corners(TriCell c) {
  if (c.type == CellType::Up) return {{c.x, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}};
  return {{c.x + 1, c.y}, {c.x + 1, c.y + 1}, {c.x, c.y + 1}};
}

std::vector<Vertex> outline(const Tile& t, const Placement& p) {
  std::vector<Vertex> out{{p.anchor.x + t.walk_start.x, p.anchor.y + t.walk_start.y}};
  for (std::size_t i = 0; i + 1 < t.walk.size(); ++i) out.push_back(step(out.back(), t.walk[i].dir));
  return out;
}

std::pair<Vertex, Vertex> endpoints(Edge e) {
  switch (e.type) {
    case EdgeType::H:
      return {{e.x, e.y}, {e.x + 1, e.y}};
    case EdgeType::A:
      return {{e.x, e.y}, {e.x, e.y + 1}};
    case EdgeType::B:
      return {{e.x + 1, e.y}, {e.x, e.y + 1}};
  }
  return {};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string render_ascii(const Puzzle& p) {
  const int n = p.n();
  const Catalog& cat = p.tiles();
  const EdgeLabels labels(p);
  std::ostringstream out;
  for (int y = n - 1; y >= 0; --y) {
    std::string line(static_cast<std::size_t>(2 * n + 1), ' ');
    for (int x = 0; x + y <= n - 1; ++x) {
      line[static_cast<std::size_t>(2 * x + y + 1)] = cat.tiles[labels.owner({x, y, CellType::Up}).tile].glyph;
      if (x + y <= n - 2) {
        line[static_cast<std::size_t>(2 * x + y + 2)] = cat.tiles[labels.owner({x, y, CellType::Down}).tile].glyph;
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_svg(const Puzzle& p) {
  const int n = p.n();
  const double scale = 40.0;
  const double margin = 10.0;
  const double height = n * std::sqrt(3.0) / 2.0;
  const auto sx = [&](Point q) { return fmt(margin + q.x * scale); };
  const auto sy = [&](Point q) { return fmt(margin + (height - q.y) * scale); };
  const Catalog& cat = p.tiles();

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(n * scale + 2 * margin) << "\" height=\""
      << fmt(height * scale + 2 * margin) << "\">\n";
  for (const Placement& pl : p.placements) {
    const Tile& t = cat.tiles[pl.tile];
    for (const TriCell& c : placement_cells(t, pl)) {
      out << "<polygon class=\"cell\" points=\"";
      for (const Vertex& v : corners(c)) out << sx(embed(v)) << ',' << sy(embed(v)) << ' ';
      out << "\" fill=\"" << t.fill << "\" stroke=\"" << t.fill << "\" stroke-width=\"0.5\"/>\n";
    }
  }
  for (const Placement& pl : p.placements) {
    const Tile& t = cat.tiles[pl.tile];
    out << "<polygon class=\"tile\" data-tile=\"" << t.id << "\" points=\"";
    for (const Vertex& v : outline(t, pl)) out << sx(embed(v)) << ',' << sy(embed(v)) << ' ';
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  const EdgeLabels labels(p);
  for (EdgeType type : {EdgeType::H, EdgeType::A, EdgeType::B}) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x + y <= n - 1; ++x) {
        const Edge e{type, x, y};
        const int label = labels.at(e);
        if (label < 0) continue;
        const auto [a, b] = endpoints(e);
        const Point pa = embed(a), pb = embed(b);
        const Point mid{(pa.x + pb.x) / 2, (pa.y + pb.y) / 2};
        out << "<text x=\"" << sx(mid) << "\" y=\"" << sy(mid)
            << "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << label << "</text>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string tikz_color(const std::string& hex) {
  if (hex.size() != 7 || hex[0] != '#') return "gray";
  const auto channel = [&](std::size_t i) { return std::to_string(std::stoi(hex.substr(i, 2), nullptr, 16)); };
  return "{rgb,255:red," + channel(1) + ";green," + channel(3) + ";blue," + channel(5) + "}";
}

std::string render_tikz(const Puzzle& p) {
  const Catalog& cat = p.tiles();
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.5]\n";
  for (const Placement& pl : p.placements) {
    const Tile& t = cat.tiles[pl.tile];
    out << "\\draw[fill=" << tikz_color(t.fill) << "] ";
    for (const Vertex& v : outline(t, pl)) {
      const Point q = embed(v);
      out << '(' << fmt(q.x) << ',' << fmt(q.y) << ") -- ";
    }
    out << "cycle; % " << t.id << '\n';
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "svg") return RenderFormat::Svg;
  if (name == "tikz") return RenderFormat::Tikz;
  if (name == "json") return RenderFormat::Json;
  throw MalformedInputError("unknown format \"" + std::string(name) + "\"");
}

std::string render(const Puzzle& p, RenderFormat format) {
  switch (format) {
    case RenderFormat::Ascii:
      return render_ascii(p);
    case RenderFormat::Svg:
      return render_svg(p);
    case RenderFormat::Tikz:
      return render_tikz(p);
    case RenderFormat::Json:
      return to_json(p).dump() + "\n";
  }
  return {};
}

}  // namespace lrk
