#include <sstream>

#include "pmsat/draw.hpp"

namespace pmsat {

namespace {

constexpr int kUnit = 20;
constexpr int kMargin = 20;

std::string render_svg(const OrthogonalDrawing& d, const std::vector<bool>& is_variable) {
  const std::int64_t w = std::max<std::int64_t>(d.width - 1, 0) * kUnit + 2 * kMargin;
  const std::int64_t h = std::max<std::int64_t>(d.height - 1, 0) * kUnit + 2 * kMargin;
  auto sx = [&](std::int64_t x) { return kMargin + x * kUnit; };
  auto sy = [&](std::int64_t y) { return kMargin + (d.height - 1 - y) * kUnit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& e : d.edges) {
    os << "<polyline points=\"";
    for (std::size_t i = 0; i < e.points.size(); ++i) {
      os << (i ? " " : "") << sx(e.points[i].x) << ',' << sy(e.points[i].y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g fill=\"white\" stroke=\"black\" stroke-width=\"2\">\n";
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    const auto& p = d.vertices[v];
    if (v < is_variable.size() && is_variable[v]) {
      os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"6\"/>\n";
    } else {
      os << "<rect x=\"" << sx(p.x) - 6 << "\" y=\"" << sy(p.y) - 6 << "\" width=\"12\" height=\"12\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

enum : unsigned { kUp = 1, kDown = 2, kLeft = 4, kRight = 8 };

const char* glyph(unsigned mask) {
  switch (mask) {
    case kLeft | kRight:
    case kLeft:
    case kRight:
      return "─";
    case kUp | kDown:
    case kUp:
    case kDown:
      return "│";
    case kRight | kDown:
      return "┌";
    case kLeft | kDown:
      return "┐";
    case kUp | kRight:
      return "└";
    case kUp | kLeft:
      return "┘";
    case 0:
      return " ";
    default:
      return "┼";
  }
}

// Twice the grid resolution so neighbouring points get a connector cell.
std::string render_ascii(const OrthogonalDrawing& d, const std::vector<bool>& is_variable) {
  if (d.width == 0 || d.height == 0) return "";
  const std::size_t cols = static_cast<std::size_t>(2 * (d.width - 1) + 1);
  const std::size_t rows = static_cast<std::size_t>(2 * (d.height - 1) + 1);
  std::vector<std::vector<unsigned>> mask(rows, std::vector<unsigned>(cols, 0));
  auto at = [&](std::int64_t x, std::int64_t y) -> unsigned& {
    return mask[rows - 1 - static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
  };
  for (const auto& e : d.edges) {
    for (std::size_t i = 1; i < e.points.size(); ++i) {
      std::int64_t x = 2 * e.points[i - 1].x, y = 2 * e.points[i - 1].y;
      const std::int64_t tx = 2 * e.points[i].x, ty = 2 * e.points[i].y;
      const std::int64_t dx = (tx > x) - (tx < x), dy = (ty > y) - (ty < y);
      const unsigned fwd = dx > 0 ? kRight : dx < 0 ? kLeft : dy > 0 ? kUp : kDown;
      const unsigned back = fwd == kRight ? kLeft : fwd == kLeft ? kRight : fwd == kUp ? kDown : kUp;
      while (x != tx || y != ty) {
        at(x, y) |= fwd;
        x += dx;
        y += dy;
        at(x, y) |= back;
      }
    }
  }
  std::vector<std::vector<std::string>> canvas(rows, std::vector<std::string>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) canvas[r][c] = glyph(mask[r][c]);
  }
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    const auto& p = d.vertices[v];
    canvas[rows - 1 - static_cast<std::size_t>(2 * p.y)][static_cast<std::size_t>(2 * p.x)] =
        v < is_variable.size() && is_variable[v] ? "o" : "#";
  }
  std::string out;
  for (const auto& row : canvas) {
    std::string line;
    for (const auto& cell : row) line += cell;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace

std::string render(const OrthogonalDrawing& drawing, RenderFormat format, const std::vector<bool>& is_variable) {
  return format == RenderFormat::svg ? render_svg(drawing, is_variable) : render_ascii(drawing, is_variable);
}

std::string render(const OrthogonalDrawing& drawing, RenderFormat format, const IncidenceGraph& graph) {
  std::vector<bool> is_variable(graph.graph.num_vertices());
  for (Vertex v = 0; v < is_variable.size(); ++v) is_variable[v] = graph.is_variable(v);
  return render(drawing, format, is_variable);
}

}  // namespace pmsat
