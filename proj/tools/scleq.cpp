#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scleq/frontend.hpp"

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  scleq::CliOptions opt;
  CLI::App app{"SCL(EQ) prover for first-order logic with equality"};
  app.add_option("file", opt.input, "problem file")->required();
  app.add_option("--format", opt.format, "input format: native | tptp-cnf")
      ->check(CLI::IsMember({"native", "tptp-cnf"}));
  std::string betaStr;
  app.add_option("--beta", betaStr, "initial bound term (overrides the problem file)");
  app.add_option("--grow", opt.grow, "number of bound increases before giving up");
  app.add_option("--max-steps", opt.maxSteps, "rule application budget");
  std::string tracePath;
  app.add_option("--trace", tracePath, "write a replayable trace to this file");
  app.add_flag("--audit", opt.audit, "check soundness invariants after every rule");
  app.add_option("--seed", opt.seed, "random seed for tie-breaking");
  std::string replayPath;
  app.add_option("--replay", replayPath, "replay a previously recorded trace file");
  CLI11_PARSE(app, argc, argv);
  if (!betaStr.empty()) opt.beta = betaStr;
  if (!tracePath.empty()) opt.tracePath = tracePath;
  if (!replayPath.empty()) opt.replayPath = replayPath;
  if (const char* env = std::getenv("SCLEQ_AUDIT"); env && std::string(env) == "1")
    opt.audit = true;

  try {
    std::string text = readFile(opt.input);
    scleq::Problem prob = opt.format == "tptp-cnf" ? scleq::parseTptpCnf(text)
                                                   : scleq::parseNative(text);
    scleq::SearchConfig cfg;
    if (opt.beta) cfg.beta = scleq::parseGroundTerm(*opt.beta, prob.sig);
    cfg.growLimit = opt.grow;
    cfg.maxSteps = opt.maxSteps;
    cfg.seed = opt.seed;
    cfg.audit = opt.audit;
    scleq::RunResult result = [&] {
      if (opt.replayPath) {
        auto trace = scleq::parseTrace(readFile(*opt.replayPath), prob.sig);
        return scleq::replay(prob, cfg, trace);
      }
      return scleq::run(prob, cfg);
    }();
    return scleq::emitResult(result, prob, opt, std::cout);
  } catch (const scleq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
