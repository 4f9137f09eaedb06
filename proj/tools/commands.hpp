#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace bier::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseOrIo = 1,
  kDomain = 2,
  kVerificationFailed = 3,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_dual(const std::filesystem::path& input, Streams io);
int cmd_sphere(const std::filesystem::path& input, Streams io);
int cmd_invariants(const std::filesystem::path& input, Streams io);
int cmd_classify(int m, const std::filesystem::path& out_dir, int threads, Streams io);

struct CharmapArgs {
  std::optional<std::filesystem::path> bier;
  std::optional<std::filesystem::path> building;
};
int cmd_charmap(const CharmapArgs& args, Streams io);

struct NestohedronArgs {
  std::filesystem::path building;
  std::optional<std::filesystem::path> off;
  std::optional<std::filesystem::path> nerve;
  std::optional<std::filesystem::path> exact;
};
int cmd_nestohedron(const NestohedronArgs& args, Streams io);

int cmd_orientable(const std::filesystem::path& matrix, Streams io);
int cmd_betti(const std::filesystem::path& complex, const std::optional<std::filesystem::path>& matrix, Streams io);
int cmd_verify_paper(const std::filesystem::path& out_dir, int threads, Streams io);

/// Parses argv and dispatches; never throws.
int run(int argc, char** argv, Streams io);

}  // namespace bier::cli
