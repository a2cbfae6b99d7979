#pragma once
// Minimal SVG 1.1 text emitter; enough for the benchmark charts without a
// plotting dependency.

#include <string>
#include <vector>

namespace erastar {

class SvgCanvas {
public:
    SvgCanvas(double width, double height);

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& stroke = "none", double stroke_width = 1.0,
              double opacity = 1.0);
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0);
    void circle(double cx, double cy, double r, const std::string& fill,
                double opacity = 1.0);
    // anchor: start | middle | end
    void text(double x, double y, const std::string& s, double size = 12.0,
              const std::string& anchor = "start", const std::string& fill = "#202020");

    std::string finish() const;

    double width() const { return width_; }
    double height() const { return height_; }

private:
    double width_;
    double height_;
    std::string body_;
};

// Maps a data interval onto a pixel interval (either direction may be
// reversed; a degenerate data interval maps to the pixel midpoint).
struct LinearScale {
    double d0 = 0.0, d1 = 1.0;
    double p0 = 0.0, p1 = 1.0;
    double operator()(double v) const {
        if (d1 == d0) return (p0 + p1) / 2.0;
        return p0 + (v - d0) / (d1 - d0) * (p1 - p0);
    }
};

}  // namespace erastar
