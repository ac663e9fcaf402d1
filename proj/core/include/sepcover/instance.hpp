#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepcover/geom.hpp"

namespace sepcover {

struct WeightedDisk {
  Point center;
  double weight = 1.0;
};

/// Points above the x-axis, weighted common-radius disks centered below it.
struct CoverageInstance {
  double radius = 1.0;
  std::vector<Point> points;
  std::vector<WeightedDisk> disks;

  int n() const { return static_cast<int>(points.size()); }
  int m() const { return static_cast<int>(disks.size()); }
  Disk disk(int j) const { return Disk{disks[j].center, radius}; }
};

/// The hitting-set sibling: weights live on the points, disks are bare.
struct HittingInstance {
  double radius = 1.0;
  std::vector<WeightedDisk> points;  // weighted points (center field = point)
  std::vector<Point> disks;          // disk centers

  int n() const { return static_cast<int>(points.size()); }
  int m() const { return static_cast<int>(disks.size()); }
};

struct WeightedHalfplane {
  HalfplaneLower h;
  double weight = 1.0;
};

/// Points covered by weighted lower halfplanes.
struct HalfplaneInstance {
  std::vector<Point> points;
  std::vector<WeightedHalfplane> halfplanes;

  int n() const { return static_cast<int>(points.size()); }
  int m() const { return static_cast<int>(halfplanes.size()); }
};

// ---------------------------------------------------------------------------
// Validation

struct Issue {
  enum class Severity { error, warning };
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  bool has_errors() const;
  std::string to_string() const;
};

/// Reports violated invariants. Hard errors: separation, non-positive
/// weights/radius, non-finite values, exact duplicate points. Warnings:
/// x-coordinate ties (repaired by index order downstream) and, when
/// check_coverage is set, uncovered points (the instance is then infeasible
/// but still solvable). With exact=true, boundary contact between a point
/// and a disk boundary is detected in rational arithmetic and flagged.
ValidationReport validate(const CoverageInstance& inst,
                          bool check_coverage = false, bool exact = false);
ValidationReport validate(const HittingInstance& inst);
ValidationReport validate(const HalfplaneInstance& inst);

// ---------------------------------------------------------------------------
// Generation

enum class Profile { uniform, clustered, adversarial_overlap };

Profile profile_from_string(const std::string& s);
std::string to_string(Profile p);

struct GenOptions {
  double radius = 1.0;
  Profile profile = Profile::uniform;
  bool infeasible = false;  // plant one uncovered point
};

/// Deterministic in (n, m, seed, options). Every point is covered by at
/// least one disk unless `infeasible` plants an unreachable one.
CoverageInstance generate(int n, int m, std::uint64_t seed,
                          const GenOptions& opts = {});
HittingInstance generate_hitting(int n, int m, std::uint64_t seed,
                                 const GenOptions& opts = {});
HalfplaneInstance generate_halfplanes(int n, int m, std::uint64_t seed,
                                      const GenOptions& opts = {});

// ---------------------------------------------------------------------------
// Serialization (JSON; schemas in README)

std::string to_json(const CoverageInstance& inst);
std::string to_json(const HittingInstance& inst);
std::string to_json(const HalfplaneInstance& inst);

/// Parse errors throw std::runtime_error naming the offending field.
CoverageInstance coverage_from_json(const std::string& text);
HittingInstance hitting_from_json(const std::string& text);
HalfplaneInstance halfplanes_from_json(const std::string& text);

enum class InstanceKind { coverage, hitting, halfplane };

/// Sniffs which schema a document uses.
InstanceKind kind_of_json(const std::string& text);

std::string read_file(const std::string& path);  // "-" reads stdin
void write_file(const std::string& path, const std::string& text);

}  // namespace sepcover
