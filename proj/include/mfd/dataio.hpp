#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfd/boxes.hpp"
#include "mfd/rng.hpp"

namespace mfd {

struct ImageRecord {
    std::string image_path;
    int width = 0;
    int height = 0;
    std::vector<LabeledBox> objects;
};

struct DatasetStats {
    std::map<std::string, int> images_per_category;
    std::map<std::string, int> objects_per_category;
    std::map<int, int> objects_per_image_histogram;
    // box area a: small a < 32^2, medium 32^2 <= a < 96^2, large otherwise
    int small_count = 0;
    int medium_count = 0;
    int large_count = 0;

    int total_objects() const { return small_count + medium_count + large_count; }
    std::string to_json() const;
};

/// Parses one VOC-style annotation (size + repeated object/bndbox). Boxes
/// hanging at most 2 px outside the image are clamped with a warning; larger
/// overflows, malformed XML, a missing size and zero-area boxes are errors
/// naming the file.
ImageRecord parse_voc_xml(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// All annotations under dir/ (recursively, *.xml), sorted by path.
std::vector<ImageRecord> load_voc_dir(const std::string& dir,
                                      std::vector<std::string>* warnings = nullptr);

struct SplitResult {
    std::vector<ImageRecord> train;
    std::vector<ImageRecord> test;
    std::vector<std::string> warnings;
};

/// Per-category random split: each category's images are shuffled with the
/// seed and floor(train_fraction * n) go to train. Images carrying several
/// categories belong to their first object's category and appear in exactly
/// one split. Categories with fewer than 2 images go entirely to train, with
/// a warning.
SplitResult split_dataset(const std::vector<ImageRecord>& records, double train_fraction,
                          std::uint64_t seed);

DatasetStats compute_stats(const std::vector<ImageRecord>& records);

}  // namespace mfd
