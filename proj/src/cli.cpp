#include "qzr/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace qzr {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string num12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string outcome_to_string(ZOutcome o) {
    return {static_cast<char>('0' + o.a), static_cast<char>('0' + o.b)};
}

ZOutcome outcome_from_string(const std::string& s) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1'))
        throw std::invalid_argument("outcome must be two bits, e.g. 01");
    return {s[0] - '0', s[1] - '0'};
}

OrderedJson matrix_json(const ComplexMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson manifest_json(const RunManifest& m) {
    OrderedJson cfg;
    cfg["theta"] = m.theta;
    cfg["j1"] = {m.threshold_i, m.threshold_j};
    cfg["n"] = m.fixed_n ? OrderedJson(*m.fixed_n) : OrderedJson(nullptr);
    cfg["n_max"] = m.n_max;
    cfg["stations"] = m.stations;
    cfg["outcome"] = m.outcome;
    cfg["fresh_side"] = m.fresh_side;
    cfg["dump_matrices"] = m.dump_matrices;

    OrderedJson j;
    j["command"] = m.command;
    j["config"] = std::move(cfg);
    j["format"] = m.format;
    j["out"] = m.out;
    return j;
}

// Everything one command produces, in both serializable shapes.
struct Payload {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    OrderedJson records = OrderedJson::array();
    std::string summary;
    OrderedJson matrices;  // chain only: sidecar content for csv + dump_matrices
};

Payload make_sweep(const RunManifest& m) {
    Payload p;
    p.header = {"n", "negativity", "best_bell_fidelity", "cumulative_probability"};

    const std::vector<SweepPoint> points = swap_sweep(initial_state(), m.swap_config());
    const SweepPoint* best = &points.front();
    for (const SweepPoint& pt : points) {
        if (pt.negativity > best->negativity) best = &pt;
        p.rows.push_back({std::to_string(pt.n), num12(pt.negativity),
                          num12(pt.best_bell_fidelity), num12(pt.cumulative_j0_probability)});
        OrderedJson rec;
        rec["n"] = pt.n;
        rec["negativity"] = pt.negativity;
        rec["best_bell_fidelity"] = pt.best_bell_fidelity;
        rec["cumulative_probability"] = pt.cumulative_j0_probability;
        p.records.push_back(std::move(rec));
    }
    p.summary = "best n=" + std::to_string(best->n) + " z_outcome=" +
                outcome_to_string(best->z_outcome) + " negativity=" + num12(best->negativity) +
                " best_bell_fidelity=" + num12(best->best_bell_fidelity);
    return p;
}

Payload make_chain(const RunManifest& m) {
    Payload p;
    p.header = {"station", "n_used", "z_outcome", "negativity", "best_bell_fidelity",
                "closest_bell"};

    const std::vector<ChainRecord> records = run_chain(m.chain_config());
    OrderedJson matrices = OrderedJson::array();
    for (const ChainRecord& rec : records) {
        const SwapResult& r = rec.result;
        p.rows.push_back({std::to_string(rec.station), std::to_string(r.n_used),
                          outcome_to_string(r.z_outcome), num12(r.negativity),
                          num12(r.best_bell_fidelity), bell_name(r.closest_bell)});
        OrderedJson jr;
        jr["station"] = rec.station;
        jr["n_used"] = r.n_used;
        jr["z_outcome"] = outcome_to_string(r.z_outcome);
        jr["negativity"] = r.negativity;
        jr["best_bell_fidelity"] = r.best_bell_fidelity;
        jr["closest_bell"] = bell_name(r.closest_bell);
        if (m.dump_matrices) {
            jr["pair_state"] = matrix_json(r.pair_state.matrix());
            OrderedJson side;
            side["station"] = rec.station;
            side["pair_state"] = matrix_json(r.pair_state.matrix());
            matrices.push_back(std::move(side));
        }
        p.records.push_back(std::move(jr));
    }
    if (m.dump_matrices) p.matrices = std::move(matrices);

    const SwapResult& last = records.back().result;
    p.summary = "station " + std::to_string(records.back().station) +
                ": negativity=" + num12(last.negativity) +
                " best_bell_fidelity=" + num12(last.best_bell_fidelity) + " (" +
                bell_name(last.closest_bell) + ")";
    return p;
}

Payload make_oracle(const RunManifest& m) {
    Payload p;
    p.header = {"outcome", "probability", "bell_fidelity"};

    const DensityMatrix input = initial_state();
    double circuit_neg = 0.0;
    for (ZOutcome oc : {ZOutcome{0, 0}, ZOutcome{0, 1}, ZOutcome{1, 0}, ZOutcome{1, 1}}) {
        const SwapResult r = circuit_swap(input, oc);
        circuit_neg = r.negativity;
        p.rows.push_back({outcome_to_string(oc), num12(r.z_outcome_probability),
                          num12(r.best_bell_fidelity)});
        OrderedJson rec;
        rec["outcome"] = outcome_to_string(oc);
        rec["probability"] = r.z_outcome_probability;
        rec["bell_fidelity"] = r.best_bell_fidelity;
        p.records.push_back(std::move(rec));
    }

    const SwapResult zeno = zeno_swap(input, m.swap_config());
    p.summary = "circuit negativity=" + num12(circuit_neg) + "; iterative n=" +
                std::to_string(zeno.n_used) + " negativity=" + num12(zeno.negativity) +
                "; gap=" + num12(std::abs(circuit_neg - zeno.negativity));
    return p;
}

Payload make_dump_state(const RunManifest& m) {
    Payload p;
    const SwapResult r = zeno_swap(initial_state(), m.swap_config());
    OrderedJson rec;
    rec["n_used"] = r.n_used;
    rec["z_outcome"] = outcome_to_string(r.z_outcome);
    rec["negativity"] = r.negativity;
    rec["best_bell_fidelity"] = r.best_bell_fidelity;
    rec["closest_bell"] = bell_name(r.closest_bell);
    rec["cumulative_j0_probability"] = r.cumulative_j0_probability;
    rec["z_outcome_probability"] = r.z_outcome_probability;
    rec["pair_state"] = matrix_json(r.pair_state.matrix());
    p.records.push_back(std::move(rec));
    p.summary = "n=" + std::to_string(r.n_used) + " z_outcome=" +
                outcome_to_string(r.z_outcome) + " negativity=" + num12(r.negativity);
    return p;
}

std::string render_csv(const Payload& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.header.size(); ++i)
        os << (i ? "," : "") << p.header[i];
    os << '\n';
    for (const auto& row : p.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream ofs(path, std::ios::binary);
    if (!ofs) throw IoError("cannot open for writing: " + path);
    ofs << text;
    ofs.flush();
    if (!ofs) throw IoError("write failed: " + path);
}

}  // namespace

void RunManifest::validate() const {
    if (command != "sweep" && command != "chain" && command != "oracle" &&
        command != "dump-state")
        throw std::invalid_argument("unknown command: " + command);
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (command == "dump-state" && format == "csv")
        throw std::invalid_argument("dump-state emits a matrix and supports only --format json");
    if (fresh_side != "left" && fresh_side != "right")
        throw std::invalid_argument("fresh-side must be left or right");
    if (outcome != "best") outcome_from_string(outcome);  // throws if malformed
    swap_config().validate();
    if (command == "chain") chain_config().validate();
}

SwapConfig RunManifest::swap_config() const {
    SwapConfig cfg;
    cfg.theta = theta;
    cfg.threshold_i = threshold_i;
    cfg.threshold_j = threshold_j;
    cfg.fixed_n = fixed_n;
    cfg.n_max = n_max;
    if (outcome == "best") {
        cfg.outcome_policy = OutcomePolicy::Best;
    } else {
        cfg.outcome_policy = OutcomePolicy::Fixed;
        cfg.fixed_outcome = outcome_from_string(outcome);
    }
    return cfg;
}

ChainConfig RunManifest::chain_config() const {
    ChainConfig cfg;
    cfg.stations = stations;
    cfg.swap = swap_config();
    cfg.fresh_side = fresh_side == "right" ? FreshSide::Right : FreshSide::Left;
    return cfg;
}

std::string manifest_to_json(const RunManifest& m) { return manifest_json(m).dump(2) + "\n"; }

RunManifest manifest_from_json(const std::string& text) {
    try {
        const OrderedJson j = OrderedJson::parse(text);
        const OrderedJson& cfg = j.at("config");
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.theta = cfg.at("theta").get<double>();
        m.threshold_i = cfg.at("j1").at(0).get<int>();
        m.threshold_j = cfg.at("j1").at(1).get<int>();
        if (!cfg.at("n").is_null()) m.fixed_n = cfg.at("n").get<int>();
        m.n_max = cfg.at("n_max").get<int>();
        m.stations = cfg.at("stations").get<int>();
        m.outcome = cfg.at("outcome").get<std::string>();
        m.fresh_side = cfg.at("fresh_side").get<std::string>();
        m.dump_matrices = cfg.at("dump_matrices").get<bool>();
        m.format = j.at("format").get<std::string>();
        m.out = j.at("out").get<std::string>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
    }
}

void apply_config_json(RunManifest& m, const std::string& text) {
    try {
        const OrderedJson j = OrderedJson::parse(text);
        if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
        for (const auto& [key, value] : j.items()) {
            if (key == "theta") {
                m.theta = value.get<double>();
            } else if (key == "j1") {
                m.threshold_i = value.at(0).get<int>();
                m.threshold_j = value.at(1).get<int>();
            } else if (key == "n") {
                if (value.is_null())
                    m.fixed_n.reset();
                else
                    m.fixed_n = value.get<int>();
            } else if (key == "n_max") {
                m.n_max = value.get<int>();
            } else if (key == "stations") {
                m.stations = value.get<int>();
            } else if (key == "outcome") {
                m.outcome = value.get<std::string>();
            } else if (key == "fresh_side") {
                m.fresh_side = value.get<std::string>();
            } else if (key == "dump_matrices") {
                m.dump_matrices = value.get<bool>();
            } else if (key == "format") {
                m.format = value.get<std::string>();
            } else if (key == "out") {
                m.out = value.get<std::string>();
            } else {
                throw std::invalid_argument("unknown config key: " + key);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed config file: ") + e.what());
    }
}

void run_manifest(const RunManifest& m) {
    m.validate();  // must reject before any output file is created

    Payload p;
    if (m.command == "sweep")
        p = make_sweep(m);
    else if (m.command == "chain")
        p = make_chain(m);
    else if (m.command == "oracle")
        p = make_oracle(m);
    else
        p = make_dump_state(m);

    std::string text;
    if (m.format == "json") {
        OrderedJson doc;
        doc["manifest"] = manifest_json(m);
        doc["records"] = p.records;
        text = doc.dump(2) + "\n";
    } else {
        text = render_csv(p);
    }

    if (m.out.empty()) {
        std::cout << text;
        std::cerr << p.summary << "\n";
        return;
    }

    write_file(m.out, text);
    if (m.format == "csv") {
        write_file(m.out + ".manifest.json", manifest_to_json(m));
        if (!p.matrices.is_null()) {
            OrderedJson side;
            side["records"] = p.matrices;
            write_file(m.out + ".matrices.json", side.dump(2) + "\n");
        }
    }
    std::cout << p.summary << "\n";
}

}  // namespace qzr
