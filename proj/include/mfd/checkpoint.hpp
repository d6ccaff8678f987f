#pragma once

#include <string>
#include <vector>

#include "mfd/params.hpp"
#include "mfd/tensor.hpp"

namespace mfd {

/// One named block of a checkpoint file.
struct CheckpointRecord {
    std::string name;
    Shape shape;
    std::vector<double> values;
};

/// Binary layout: magic "MFDN", u32 format version, u32 record count, then
/// per record u32 name length + name bytes + 4x u32 extents + raw doubles.
/// All integers and doubles are little-endian, so files are byte-identical
/// across platforms.
void save_checkpoint(const std::string& path, const std::vector<CheckpointRecord>& records);
std::vector<CheckpointRecord> load_checkpoint(const std::string& path);

/// Loads model parameters by name into the store (records starting with "_"
/// carry trainer state and are skipped). Missing or shape-mismatched names
/// are errors.
void load_params(const std::vector<CheckpointRecord>& records, ParamStore& store);

}  // namespace mfd
