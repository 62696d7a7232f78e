#ifndef QAM_CLI_HPP
#define QAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qam {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the qam command line. args[0] is the program name. Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on usage errors and
/// 2 when a domain error (qam::Error) aborts the command.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qam

#endif  // QAM_CLI_HPP
