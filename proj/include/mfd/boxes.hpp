#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace mfd {

/// Axis-aligned box, continuous coordinates, (x1,y1) top-left exclusive of
/// nothing: area = (x2-x1)*(y2-y1).
struct Box {
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

    double width() const { return x2 - x1; }
    double height() const { return y2 - y1; }
    double area() const { return std::max(0.0, width()) * std::max(0.0, height()); }
    bool valid() const { return x2 > x1 && y2 > y1; }

    Box clipped(double w, double h) const {
        return {std::clamp(x1, 0.0, w), std::clamp(y1, 0.0, h), std::clamp(x2, 0.0, w),
                std::clamp(y2, 0.0, h)};
    }
};

struct LabeledBox {
    std::string class_name;
    Box box;
};

struct Detection {
    int image_id = 0;
    int class_id = 0;
    Box box;
    double score = 0.0;
};

struct GroundTruth {
    int image_id = 0;
    int class_id = 0;
    Box box;
};

/// Intersection-over-union; 0 for disjoint or degenerate boxes.
double iou(const Box& a, const Box& b);

}  // namespace mfd
