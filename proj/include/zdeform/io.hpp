#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdeform/grid.hpp"
#include "zdeform/oracle.hpp"
#include "zdeform/experiments.hpp"

namespace zdeform {

/// Format a double with 17 significant digits (exact decimal round-trip).
std::string fmt17(double v);
/// Format a double with 9 significant digits.
std::string fmt9(double v);
/// Format a double with 3 decimals (SVG coordinates).
std::string fmt3(double v);

/// Minimal ordered JSON writer with fixed float formatting, so repeated runs
/// emit byte-identical documents.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value_raw(const std::string& text);
    JsonWriter& null();
    std::string str() const { return out_; }

  private:
    void comma();
    std::string out_;
    std::vector<bool> first_in_scope_;
    bool pending_key_ = false;
};

std::string escape_json(const std::string& s);

/// FNV-1a 64-bit over a byte string, hex encoded; used for manifest hashes.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

std::string grid_to_json(const DeformationGrid& g);
/// Flat node table; header frozen as
/// k,b,K,B,stable,representable,identity_deviation,orthogonality_angle_deg.
std::string grid_to_csv(const DeformationGrid& g);

struct SvgOptions {
    bool show_reference = true;
    /// Plot B + b0 instead of the virtual B on the vertical axis (display
    /// convention only; data files always carry the virtual B).
    bool b_axis_total = false;
    double b0 = 0.0;
};

std::string grid_to_svg(const DeformationGrid& g, const SvgOptions& opt = {});

struct ManifestEntry {
    std::string file;
    std::string hash;
};

/// Run manifest: command line, config hash, tool version and output hashes
/// are deterministic; the timestamp sits in its own field outside any hash.
std::string manifest_to_json(const std::string& command_line, const std::string& config_hash,
                             const std::vector<ManifestEntry>& outputs,
                             const std::string& timestamp);

std::string cross_check_to_json(const CrossCheckReport& r);
std::string table1_to_json(const Table1Report& r);
std::string table1_to_text(const Table1Report& r);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace zdeform
