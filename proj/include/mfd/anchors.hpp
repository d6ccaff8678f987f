#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "mfd/boxes.hpp"

namespace mfd {

struct Anchor {
    Box box;
    int level = 0;
};

/// One anchor per (cell, scale, ratio), centered on the cell. A square anchor
/// at ratio 1 has side scale*stride; ratio r trades width for height at equal
/// area. Enumeration order: level ascending, then row, column, scale, ratio.
std::vector<Anchor> generate_anchors(const std::map<int, std::pair<int, int>>& level_shapes,
                                     const std::map<int, int>& strides,
                                     const std::vector<double>& scales,
                                     const std::vector<double>& ratios);

/// Center-size box regression. Deltas are divided by stds before encoding and
/// multiplied back when decoding; tw/th are clamped to +-4 before exp.
std::array<double, 4> encode_deltas(const Box& anchor, const Box& target,
                                    const std::array<double, 4>& stds);
Box decode_deltas(const Box& anchor, const std::array<double, 4>& deltas,
                  const std::array<double, 4>& stds);

/// Greedy descending-score suppression: a box is dropped iff its IoU with an
/// already kept higher-scoring box exceeds the threshold. Score ties keep the
/// lower original index first. Returns kept indices in visit order.
std::vector<int> nms(const std::vector<Box>& boxes, const std::vector<double>& scores,
                     double iou_threshold);

}  // namespace mfd
