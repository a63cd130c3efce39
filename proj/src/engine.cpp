#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chainprover/engine.hpp"
#include "chainprover/tptp.hpp"

namespace chainprover::engine {

using fol::FormulaPtr;

namespace {

EntailmentOutcome internal_check(const std::vector<FormulaPtr>& axioms,
                                 const FormulaPtr& conjecture,
                                 const EngineConfig& cfg) {
  std::vector<FormulaPtr> problem = axioms;
  problem.push_back(fol::Formula::negate(conjecture));

  ClauseSet cs;
  try {
    cs = clausify(problem);
  } catch (const EngineError& e) {
    return {OutcomeKind::EngineError, e.what(), false};
  }

  std::vector<FormulaPtr> for_sig = axioms;
  for_sig.push_back(conjecture);
  fol::Signature sig = fol::signature_of(for_sig);

  int depth = cs.function_free() ? 0 : cfg.skolem_depth_bound;
  GroundProblem gp;
  try {
    gp = ground(cs, sig, depth, cfg.max_ground_clauses);
  } catch (const GroundingBudgetExceeded& e) {
    return {OutcomeKind::EngineError, e.what(), false};
  }

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(cfg.timeout_ms);
  std::optional<SatResult> res = sat(gp, deadline);
  if (!res)
    return {OutcomeKind::Indeterminate, "internal solver timeout", true};
  if (!res->satisfiable) return {OutcomeKind::Entailed, "refutation found", false};
  if (cs.function_free())
    return {OutcomeKind::NotEntailed, "countermodel found", false};
  return {OutcomeKind::Indeterminate,
          "satisfiable at Skolem depth bound " + std::to_string(depth), true};
}

struct Pipe {
  int fds[2] = {-1, -1};
  Pipe() {
    if (pipe(fds) != 0) throw EngineError("pipe() failed");
  }
  ~Pipe() {
    if (fds[0] >= 0) close(fds[0]);
    if (fds[1] >= 0) close(fds[1]);
  }
};

std::vector<std::string> split_command(const std::string& cmd) {
  std::istringstream in(cmd);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

}  // namespace

EntailmentOutcome run_external_prover(const std::string& tptp_document,
                                      const EngineConfig& cfg) {
  if (cfg.prover_command.empty())
    return {OutcomeKind::EngineError, "external backend without prover_command",
            false};

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  char name[] = "chainprover_XXXXXX";
  std::string path_template = (dir / name).string();
  std::vector<char> buf(path_template.begin(), path_template.end());
  buf.push_back('\0');
  int tmp_fd = mkstemp(buf.data());
  if (tmp_fd < 0) return {OutcomeKind::EngineError, "mkstemp failed", false};
  std::string path(buf.data());
  {
    ssize_t n = write(tmp_fd, tptp_document.data(), tptp_document.size());
    close(tmp_fd);
    if (n != static_cast<ssize_t>(tptp_document.size()))
      return {OutcomeKind::EngineError, "failed to write TPTP file", false};
  }

  std::vector<std::string> argv_s = split_command(cfg.prover_command);
  int timeout_s = std::max(1, cfg.timeout_ms / 1000);
  for (std::string& a : argv_s) {
    std::size_t at = a.find("{timeout_s}");
    if (at != std::string::npos)
      a.replace(at, std::strlen("{timeout_s}"), std::to_string(timeout_s));
  }
  argv_s.push_back(path);

  EntailmentOutcome outcome{OutcomeKind::EngineError, "", false};
  try {
    Pipe out_pipe;
    pid_t pid = fork();
    if (pid < 0) throw EngineError("fork() failed");
    if (pid == 0) {
      dup2(out_pipe.fds[1], STDOUT_FILENO);
      dup2(out_pipe.fds[1], STDERR_FILENO);
      close(out_pipe.fds[0]);
      close(out_pipe.fds[1]);
      std::vector<char*> argv;
      for (std::string& a : argv_s) argv.push_back(a.data());
      argv.push_back(nullptr);
      execvp(argv[0], argv.data());
      _exit(127);
    }
    close(out_pipe.fds[1]);
    out_pipe.fds[1] = -1;

    std::string captured;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::milliseconds(cfg.timeout_ms + 500);
    bool killed = false;
    char chunk[4096];
    for (;;) {
      auto now = std::chrono::steady_clock::now();
      long remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                           deadline - now)
                           .count();
      if (remaining <= 0) {
        if (!killed) {
          kill(pid, SIGKILL);
          killed = true;
        }
        remaining = 100;
      }
      struct pollfd pfd{out_pipe.fds[0], POLLIN, 0};
      int rc = poll(&pfd, 1, static_cast<int>(remaining));
      if (rc > 0) {
        ssize_t n = read(out_pipe.fds[0], chunk, sizeof(chunk));
        if (n <= 0) break;
        captured.append(chunk, static_cast<std::size_t>(n));
      } else if (rc == 0 && killed) {
        break;
      }
    }
    int status = 0;
    waitpid(pid, &status, 0);
    fs::remove(path);

    if (killed)
      return {OutcomeKind::Indeterminate, "external prover timed out", true};

    tptp::SzsOutcome szs = tptp::parse_szs(captured);
    switch (szs.status) {
      case tptp::SzsStatus::Theorem:
        return {OutcomeKind::Entailed, szs.raw_line, false};
      case tptp::SzsStatus::CounterSatisfiable:
      case tptp::SzsStatus::Satisfiable:
        return {OutcomeKind::NotEntailed, szs.raw_line, false};
      case tptp::SzsStatus::Timeout:
      case tptp::SzsStatus::GaveUp:
        return {OutcomeKind::Indeterminate, szs.raw_line, true};
      case tptp::SzsStatus::Error:
        return {OutcomeKind::EngineError, "prover reported: " + szs.raw_line,
                false};
      case tptp::SzsStatus::Unparsed:
        return {OutcomeKind::EngineError,
                "no SZS status line in prover output (exit " +
                    std::to_string(WIFEXITED(status) ? WEXITSTATUS(status)
                                                     : -1) +
                    ")",
                false};
    }
  } catch (const std::exception& e) {
    std::error_code ec;
    fs::remove(path, ec);
    return {OutcomeKind::EngineError, e.what(), false};
  }
  return outcome;
}

EntailmentOutcome check_entailment(const std::vector<FormulaPtr>& axioms,
                                   const FormulaPtr& conjecture,
                                   const EngineConfig& cfg) {
  if (cfg.backend == Backend::Internal)
    return internal_check(axioms, conjecture, cfg);
  tptp::TptpProblem problem = tptp::make_problem(axioms, conjecture);
  return run_external_prover(tptp::emit_problem(problem), cfg);
}

}  // namespace chainprover::engine
