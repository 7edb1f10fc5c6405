#include "hangword/render.hpp"

#include <sstream>

namespace hangword {

  namespace {
    constexpr int kColumn  = 60;
    constexpr int kLane    = 44;
    constexpr int kTop     = 40;
    constexpr int kSpine   = 24;
    constexpr int kRadius  = 14;
    constexpr int kPicture = 36;

    int nail_x(int index) {
      return kSpine + index * kColumn;
    }
  }  // namespace

  std::string render_svg(Word const& w) {
    int const lanes  = static_cast<int>(w.length());
    int const width  = nail_x(w.rank()) + kColumn;
    int const bottom = kTop + kLane * (lanes + 1);
    int const height = bottom + kPicture + 20;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
    svg << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" "
           "refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" "
           "fill=\"#1f4fbf\"/></marker></defs>\n";
    svg << "  <style>.nail{fill:#000}.ghost{fill:#bbb}"
           ".wire,.loop{fill:none;stroke:#1f4fbf;stroke-width:3}"
           ".picture{fill:#f4e7c5;stroke:#6b4f1d;stroke-width:3}"
           "text{font:12px sans-serif}</style>\n";

    for (int i = 1; i <= w.rank(); ++i) {
      svg << "  <circle class=\"nail\" cx=\"" << nail_x(i) << "\" cy=\""
          << kTop << "\" r=\"7\"/>\n";
      svg << "  <text x=\"" << nail_x(i) - 8 << "\" y=\"" << kTop - 14
          << "\">x" << i << "</text>\n";
    }

    if (lanes == 0) {
      svg << "  <line class=\"wire\" x1=\"" << kSpine << "\" y1=\"" << kTop
          << "\" x2=\"" << kSpine << "\" y2=\"" << bottom << "\"/>\n";
    } else {
      // Spine from the hook down to the picture; every lane branches off it.
      svg << "  <line class=\"wire\" x1=\"" << kSpine << "\" y1=\"" << kTop
          << "\" x2=\"" << kSpine << "\" y2=\"" << bottom << "\"/>\n";
      int lane = 0;
      for (Letter l : w.letters()) {
        int const y  = kTop + kLane * (++lane);
        int const cx = nail_x(l.index());
        int const sweep = l.sign() > 0 ? 1 : 0;
        svg << "  <circle class=\"ghost\" cx=\"" << cx << "\" cy=\"" << y
            << "\" r=\"4\"/>\n";
        svg << "  <path class=\"loop " << (sweep ? "cw" : "ccw")
            << "\" marker-mid=\"url(#arrow)\" d=\"M" << kSpine << ',' << y
            << " L" << cx - kRadius << ',' << y << " A" << kRadius << ','
            << kRadius << " 0 0 " << sweep << ' ' << cx + kRadius << ','
            << y << " A" << kRadius << ',' << kRadius << " 0 0 " << sweep
            << ' ' << cx - kRadius << ',' << y << " L" << kSpine << ',' << y
            << "\"/>\n";
      }
    }

    svg << "  <rect class=\"picture\" x=\"" << kSpine - 18 << "\" y=\""
        << bottom << "\" width=\"" << width - 2 * (kSpine - 18)
        << "\" height=\"" << kPicture << "\"/>\n";
    svg << "</svg>\n";
    return svg.str();
  }

}  // namespace hangword
