#include "halfball/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace halfball::figures {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// World rectangle [x0, x1] x [y0, y1] drawn into a width x height canvas, y up.
class Canvas {
 public:
  Canvas(double x0, double x1, double y0, double y1, double width = 640.0)
      : x0_(x0), y1_(y1), scale_(width / (x1 - x0)), width_(width), height_((y1 - y0) * scale_) {}

  double sx(double x) const { return (x - x0_) * scale_; }
  double sy(double y) const { return (y1_ - y) * scale_; }
  double len(double d) const { return d * scale_; }

  void line(double xa, double ya, double xb, double yb, const std::string& style) {
    body_ += "<line x1=\"" + num(sx(xa)) + "\" y1=\"" + num(sy(ya)) + "\" x2=\"" + num(sx(xb)) + "\" y2=\"" +
             num(sy(yb)) + "\" " + style + "/>\n";
  }
  void circle(double x, double y, double r, const std::string& style) {
    body_ += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) + "\" r=\"" + num(len(r)) + "\" " + style + "/>\n";
  }
  void dot(double x, double y, const std::string& color) {
    body_ += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
  }
  void rect(double xa, double ya, double xb, double yb, const std::string& style) {
    body_ += "<rect x=\"" + num(sx(xa)) + "\" y=\"" + num(sy(yb)) + "\" width=\"" + num(len(xb - xa)) +
             "\" height=\"" + num(len(yb - ya)) + "\" " + style + "/>\n";
  }
  void text(double x, double y, const std::string& s, const std::string& anchor = "start") {
    body_ += "<text x=\"" + num(sx(x) + 4) + "\" y=\"" + num(sy(y) - 4) + "\" font-size=\"12\" text-anchor=\"" +
             anchor + "\">" + s + "</text>\n";
  }
  void raw(const std::string& s) { body_ += s; }

  // b_R(z): lower arc of C_R(z) from q- to q+, upper arc of ∂T(z) back to q-
  void half_ball(const hyp2::HPoint& z, double radius, const std::string& style) {
    const auto m = hyp2::boundary_markers(z, radius);
    const std::string rb = num(len(m.euclid_radius));
    const std::string rt = num(len(z.y()));
    body_ += "<path d=\"M " + num(sx(m.q_minus.x())) + " " + num(sy(m.q_minus.y())) + " A " + rb + " " + rb +
             " 0 0 0 " + num(sx(m.q_plus.x())) + " " + num(sy(m.q_plus.y())) + " A " + rt + " " + rt + " 0 0 0 " +
             num(sx(m.q_minus.x())) + " " + num(sy(m.q_minus.y())) + " Z\" " + style + "/>\n";
  }

  void axes() {
    line(x0_, 0.0, x0_ + width_ / scale_, 0.0, "stroke=\"black\" stroke-width=\"1\"");
  }

  std::string finish() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           num(width_) + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) +
           "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_ + "</svg>\n";
  }

 private:
  double x0_, y1_, scale_, width_, height_;
  std::string body_;
};

const char* kDashed = "stroke=\"black\" stroke-dasharray=\"6 4\" fill=\"none\"";

}  // namespace

std::string axes_svg() {
  Canvas c(-2.0, 2.0, -0.2, 2.0);
  c.axes();
  c.line(0.0, 0.0, 0.0, 2.0, "stroke=\"black\" stroke-width=\"1\"");
  c.text(2.0, 0.0, "Re", "end");
  c.text(0.0, 2.0, "Im");
  return c.finish();
}

std::string rectangle_svg(const hyp2::HPoint& z, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("rectangle_svg: R must be positive");
  const double x = z.x();
  const double y = z.y();
  const double base = y * std::exp(-radius);
  const double top = std::max(2.5 * y, y * std::cosh(radius) + y * std::sinh(radius)) * 0.6;
  Canvas c(x - 2.0 * y, x + 2.0 * y, -0.15 * top, top);
  c.axes();
  c.rect(x - y, base, x + y, top, "fill=\"#d6e4ff\" stroke=\"none\"");
  c.line(x - y, 0.0, x - y, top, kDashed);
  c.line(x + y, 0.0, x + y, top, kDashed);
  c.line(x - 1.25 * y, base, x + 1.25 * y, base, kDashed);
  c.half_ball(z, radius, "fill=\"#9db8f0\" stroke=\"blue\" stroke-width=\"1.5\"");
  const auto m = hyp2::boundary_markers(z, radius);
  for (const auto* p : {&m.q_minus, &m.q_plus}) c.dot(p->x(), p->y(), "blue");
  for (const auto* p : {&m.p_minus, &m.p_plus}) c.dot(p->x(), p->y(), "green");
  c.dot(x, y, "red");
  c.text(x, y, "z");
  c.text(x - y, 0.0, "Re z - Im z", "middle");
  c.text(x + y, 0.0, "Re z + Im z", "middle");
  c.text(x + 1.25 * y, base, "e^{-R} Im z");
  c.text(x, 0.8 * top, "Q_R(z)", "middle");
  return c.finish();
}

std::string tiling_svg(int count, double radius) {
  if (count < 1) throw std::invalid_argument("tiling_svg: count must be positive");
  if (!(radius > 0.0)) throw std::invalid_argument("tiling_svg: R must be positive");
  const double step = 2.0 * std::tanh(radius);
  const double total = step * (count - 1);
  Canvas c(-total / 2 - 1.5, total / 2 + 1.5, -0.2, 1.6);
  c.axes();
  c.line(-total / 2 - 1.0, 1.0, total / 2 + 1.0, 1.0, "stroke=\"black\" stroke-width=\"1.5\"");
  for (int k = 0; k < count; ++k) {
    c.half_ball(hyp2::HPoint(k * step - total / 2, 1.0), radius,
                "fill=\"#cfe0ff\" stroke=\"blue\" stroke-width=\"1.5\"");
  }
  c.dot(-total / 2, 1.0, "red");
  c.dot(total / 2, 1.0, "red");
  return c.finish();
}

std::string packing_svg(int level, int max_drawn) {
  if (level < 0 || level > 4) throw std::invalid_argument("packing_svg: level must be in 0..4");
  const double r = std::ldexp(1.0, level);
  const double h = std::exp(-r);
  const double rho = 2.0 * h * std::tanh(r);
  const auto n = static_cast<long long>(std::floor(1.0 / rho)) + 1;
  Canvas c(-2.4, 2.4, -0.2, 3.0);
  c.axes();
  const double sh = std::sinh(1.0);
  const double ch = std::cosh(1.0);
  for (double s : {-1.0, 1.0}) c.circle(s, ch, sh, "fill=\"none\" stroke=\"gray\" stroke-width=\"1\"");
  const long long drawn = std::min<long long>(n, max_drawn);
  for (long long i = 0; i < drawn; ++i) {
    // spread the drawn subset evenly over the packing
    const long long k = drawn == 1 ? 0 : i * (n - 1) / (drawn - 1);
    const double x = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(n - 1);
    c.half_ball(hyp2::HPoint(x, h), r, "fill=\"#9db8f0\" stroke=\"blue\" stroke-width=\"1\"");
  }
  c.dot(-1.0, h, "red");
  c.dot(1.0, h, "red");
  c.text(-2.3, 2.8, "level " + std::to_string(level) + ": " + std::to_string(drawn) + " of " + std::to_string(n) +
                         " half balls");
  return c.finish();
}

}  // namespace halfball::figures
