#pragma once

#include <string>
#include <vector>

#include "mfd/dataio.hpp"
#include "mfd/image.hpp"

namespace mfd {

struct SynthConfig {
    int num_classes = 5;
    std::uint64_t glyph_seed = 7;
    int images_train = 200;
    int images_test = 50;
    int canvas = 128;
    double min_scale = 0.15;  // glyph side as a fraction of the canvas
    double max_scale = 0.45;
    int max_objects = 3;
    double noise = 0.05;  // background noise amplitude in [0,1]

    void validate() const;
};

struct SynthScene {
    ImageU8 image;
    ImageRecord record;  // image_path filled by the corpus writer
};

/// Class names are "logo-00".."logo-NN".
std::vector<std::string> synth_class_names(int num_classes);

/// Renders one deterministic scene: glyphs are procedural compositions of
/// filled primitives (per-class, derived from glyph_seed), pasted onto a noise
/// background with rejection of overlaps above IoU 0.3. Annotation boxes are
/// the exact paste rectangles.
SynthScene generate_scene(const SynthConfig& cfg, std::uint64_t base_seed, int image_index);

struct SynthCorpus {
    std::vector<std::string> class_names;
    std::vector<SynthScene> train;
    std::vector<SynthScene> test;
};

SynthCorpus generate_synthetic(const SynthConfig& cfg, std::uint64_t seed, int threads = 1);

/// Writes images/*.png, annotations/*.xml and manifest.json under out_dir.
void write_corpus(const SynthCorpus& corpus, const std::string& out_dir);

struct ManifestDataset {
    std::vector<std::string> class_names;
    std::vector<ImageRecord> train;
    std::vector<ImageRecord> test;
};

/// Loads a corpus previously written by write_corpus.
ManifestDataset load_manifest_dataset(const std::string& dir);

}  // namespace mfd
