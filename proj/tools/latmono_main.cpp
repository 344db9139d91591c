// latmono: run verification suites and export the constructed objects.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "latmono/suites.hpp"

namespace {

constexpr int kUsageError = 2;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "latmono: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << text;
  return out ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice and permutation-group certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", latmono::toolkit_version());

  std::string suite;
  std::string format = "text";
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its certificate");
  verify->add_option("--suite", suite, "del_pezzo, gosset, weyl, lattices, k3_glue, gaussian or all")->required();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", verify_out, "Write the certificate here instead of stdout");

  std::string object;
  std::string export_out;
  auto* exp = app.add_subcommand("export", "Write an object in its text format");
  exp->add_option("--object", object, "gosset, schlafli, h-minus or k3-gram")->required();
  exp->add_option("--out", export_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (verify->parsed()) {
    if (!latmono::is_known_suite(suite)) {
      std::cerr << "latmono: unknown suite '" << suite << "'\n" << verify->help();
      return kUsageError;
    }
    const latmono::Certificate cert = latmono::run_suites(suite);
    const std::string text = format == "json" ? latmono::to_json(cert) : latmono::to_text(cert);
    if (const int rc = write_output(text, verify_out); rc != 0) return rc;
    return cert.all_passed() ? 0 : 1;
  }

  bool known = false;
  for (const auto& n : latmono::export_names()) known = known || n == object;
  if (!known) {
    std::cerr << "latmono: unknown object '" << object << "'\n" << exp->help();
    return kUsageError;
  }
  try {
    return write_output(latmono::export_object(object), export_out);
  } catch (const std::exception& e) {
    std::cerr << "latmono: " << e.what() << '\n';
    return 1;
  }
}
