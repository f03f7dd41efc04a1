#include "cmc1/cli.hpp"

#include <cstdio>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmc1/catalog.hpp"
#include "cmc1/ends.hpp"
#include "cmc1/index_report.hpp"
#include "cmc1/io.hpp"
#include "cmc1/killing.hpp"
#include "cmc1/mesh.hpp"
#include "cmc1/spectral_numeric.hpp"
#include "cmc1/spectral_oracle.hpp"

namespace cmc1::cli {

namespace {

using nlohmann::json;

json flags_json(const IndexReportFlags& f) {
    return json{{"horosphere", f.horosphere},
                {"stable_excluded", f.stable_excluded},
                {"finite_total_curvature", f.finite_total_curvature},
                {"infinite_index", f.infinite_index},
                {"addendum_mode", f.addendum_mode},
                {"inconsistent", f.inconsistent}};
}

json report_json(const IndexReport& r, const json& config) {
    json lbs = json::array();
    for (const auto& lb : r.lower_bounds) lbs.push_back({{"value", lb.value}, {"source", lb.source}});
    json j{{"name", r.name},
           {"ind_u", r.ind_u},
           {"interval", {r.lo, r.hi}},
           {"lower_bounds", lbs},
           {"flags", flags_json(r.flags)},
           {"config", config}};
    if (r.nullity >= 0) j["nullity"] = r.nullity;
    return j;
}

json ends_sidecar_json(const SurfaceMesh& mesh, const json& config) {
    json ends = json::array();
    for (const auto& e : mesh.ends) {
        json je{{"boundary", e.boundary}, {"mu", e.mu}, {"m", e.m}};
        if (e.ideal_infinity)
            je["ideal"] = "infinity";
        else
            je["ideal"] = {e.ideal[0], e.ideal[1], e.ideal[2]};
        ends.push_back(je);
    }
    return json{{"surface", mesh.surface_name},
                {"grid", {{"nu", mesh.nu}, {"nv", mesh.nv}, {"wrap_v", mesh.wrap_v}}},
                {"ends", ends},
                {"seam_defect", mesh.seam_defect},
                {"conformality_defect", mesh.conformality_defect},
                {"config", config}};
}

void load_sidecar(SurfaceMesh& mesh, const std::string& path) {
    const json j = json::parse(read_file(path));
    mesh.surface_name = j.value("surface", std::string{});
    mesh.nu = j["grid"]["nu"].get<int>();
    mesh.nv = j["grid"]["nv"].get<int>();
    mesh.wrap_v = j["grid"]["wrap_v"].get<bool>();
    for (const auto& je : j["ends"]) {
        MeshEnd e;
        e.boundary = je["boundary"].get<std::string>();
        e.mu = je["mu"].get<double>();
        e.m = je["m"].get<int>();
        if (je["ideal"].is_string()) {
            e.ideal_infinity = true;
        } else {
            e.ideal = {je["ideal"][0].get<double>(), je["ideal"][1].get<double>(),
                       je["ideal"][2].get<double>()};
        }
        mesh.ends.push_back(e);
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// configuration file defaults: a flat JSON object applied before flag parsing
json load_config_defaults(std::vector<std::string>& args) {
    json cfg = json::object();
    for (size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            cfg = json::parse(read_file(args[i + 1]));
            if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
    }
    return cfg;
}

template <typename T>
void cfg_default(const json& cfg, const char* key, T& target) {
    if (cfg.contains(key)) target = cfg[key].get<T>();
}

int run_impl(std::vector<std::string> args, std::ostream& out) {
    const json cfg = load_config_defaults(args);

    CLI::App app{"constant mean curvature 1 surfaces in hyperbolic 3-space"};
    app.require_subcommand(1);

    // ---- surface ----------------------------------------------------------
    auto* surface = app.add_subcommand("surface", "sample a catalog surface into an OBJ mesh");
    std::string sf_example = "horosphere", sf_grid = "16x16", sf_out = "surface";
    double sf_mu = 0.5, sf_rmin = 0.01, sf_rmax = 100.0, sf_extent = 1.0;
    cfg_default(cfg, "example", sf_example);
    cfg_default(cfg, "grid", sf_grid);
    cfg_default(cfg, "mu", sf_mu);
    cfg_default(cfg, "rmin", sf_rmin);
    cfg_default(cfg, "rmax", sf_rmax);
    cfg_default(cfg, "extent", sf_extent);
    cfg_default(cfg, "out", sf_out);
    surface->add_option("--example", sf_example);
    surface->add_option("--grid", sf_grid);
    surface->add_option("--mu", sf_mu);
    surface->add_option("--rmin", sf_rmin);
    surface->add_option("--rmax", sf_rmax);
    surface->add_option("--extent", sf_extent);
    surface->add_option("--out", sf_out);

    // ---- spectrum ---------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "numeric spectrum vs the closed form");
    double sp_mu = 1.0, sp_cutoff = 2.0, sp_tol = 1e-4, sp_band = 1e-3;
    std::string sp_out = "spectrum.csv";
    cfg_default(cfg, "mu", sp_mu);
    cfg_default(cfg, "cutoff", sp_cutoff);
    cfg_default(cfg, "tol", sp_tol);
    cfg_default(cfg, "null_band", sp_band);
    cfg_default(cfg, "out", sp_out);
    spectrum->add_option("--mu", sp_mu);
    spectrum->add_option("--cutoff", sp_cutoff);
    spectrum->add_option("--tol", sp_tol);
    spectrum->add_option("--null-band", sp_band);
    spectrum->add_option("--out", sp_out);

    // ---- index ------------------------------------------------------------
    auto* index = app.add_subcommand("index", "index report for a catalog family");
    std::string ix_example = "catenoid-cousin", ix_out;
    double ix_mu = 0.5;
    int ix_k = 1, ix_n = 3, ix_m = 3;
    bool ix_addendum = false;
    cfg_default(cfg, "example", ix_example);
    cfg_default(cfg, "mu", ix_mu);
    cfg_default(cfg, "k", ix_k);
    cfg_default(cfg, "n", ix_n);
    cfg_default(cfg, "m", ix_m);
    cfg_default(cfg, "addendum", ix_addendum);
    cfg_default(cfg, "out", ix_out);
    index->add_option("--example", ix_example);
    index->add_option("--mu", ix_mu);
    index->add_option("--k", ix_k);
    index->add_option("--n", ix_n);
    index->add_option("--m", ix_m);
    index->add_flag("--addendum", ix_addendum);
    index->add_option("--out", ix_out);

    // ---- horizon ----------------------------------------------------------
    auto* horizon = app.add_subcommand("horizon", "Killing-field horizon and vision numbers");
    std::string hz_mesh, hz_ends, hz_field = "dilation", hz_out = "horizon";
    double hz_tol = 1e-6;
    cfg_default(cfg, "mesh", hz_mesh);
    cfg_default(cfg, "ends", hz_ends);
    cfg_default(cfg, "field", hz_field);
    cfg_default(cfg, "tol", hz_tol);
    cfg_default(cfg, "out", hz_out);
    horizon->add_option("--mesh", hz_mesh)->required(false);
    horizon->add_option("--ends", hz_ends);
    horizon->add_option("--field", hz_field);
    horizon->add_option("--tol", hz_tol);
    horizon->add_option("--out", hz_out);

    // ---- ends -------------------------------------------------------------
    auto* ends_cmd = app.add_subcommand("ends", "classify a regular end");
    double en_mu = 1.0, en_nu = -2.0, en_q2 = 2.0;
    std::string en_out;
    cfg_default(cfg, "mu", en_mu);
    cfg_default(cfg, "nu", en_nu);
    cfg_default(cfg, "q2", en_q2);
    cfg_default(cfg, "out", en_out);
    ends_cmd->add_option("--mu", en_mu);
    ends_cmd->add_option("--nu", en_nu);
    ends_cmd->add_option("--q2", en_q2);
    ends_cmd->add_option("--out", en_out);

    // ---- monodromy --------------------------------------------------------
    auto* mono = app.add_subcommand("monodromy", "frame monodromy around a loop");
    std::string mn_example = "horosphere", mn_out;
    double mn_mu = 0.5, mn_radius = 1.0, mn_center_re = 0.5, mn_center_im = 0.0;
    int mn_samples = 64;
    cfg_default(cfg, "example", mn_example);
    cfg_default(cfg, "mu", mn_mu);
    cfg_default(cfg, "radius", mn_radius);
    cfg_default(cfg, "samples", mn_samples);
    cfg_default(cfg, "out", mn_out);
    mono->add_option("--example", mn_example);
    mono->add_option("--mu", mn_mu);
    mono->add_option("--radius", mn_radius);
    mono->add_option("--center-re", mn_center_re);
    mono->add_option("--center-im", mn_center_im);
    mono->add_option("--samples", mn_samples);
    mono->add_option("--out", mn_out);

    std::vector<std::string> cli_args(args.rbegin(), args.rend());
    try {
        app.parse(cli_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }

    if (*surface) {
        int nx = 16, ny = 16;
        if (std::sscanf(sf_grid.c_str(), "%dx%d", &nx, &ny) != 2)
            throw std::invalid_argument("surface: --grid expects NxM");
        const json config{{"subcommand", "surface"}, {"example", sf_example}, {"grid", sf_grid},
                          {"mu", sf_mu},             {"rmin", sf_rmin},       {"rmax", sf_rmax},
                          {"extent", sf_extent},     {"out", sf_out}};
        const CatalogSurface cs = catalog_by_name(sf_example, sf_mu);
        SurfaceMesh mesh;
        if (cs.data) {
            RectGridSpec spec;
            spec.nx = nx;
            spec.ny = ny;
            spec.x0 = -sf_extent;
            spec.x1 = sf_extent;
            spec.y0 = -sf_extent;
            spec.y1 = sf_extent;
            mesh = mesh_generate_rect(cs, spec);
        } else {
            AnnulusGridSpec spec;
            spec.nr = nx;
            spec.ntheta = ny;
            spec.rmin = sf_rmin;
            spec.rmax = sf_rmax;
            mesh = mesh_generate_annulus(cs, spec);
        }
        write_file(sf_out + ".obj", obj_string(mesh, "config: " + config.dump()));
        write_file(sf_out + ".ends.json", dump(ends_sidecar_json(mesh, config)));
        out << "surface: " << mesh.vertices.size() << " vertices, " << mesh.faces.size()
            << " faces -> " << sf_out << ".obj\n";
        return 0;
    }

    if (*spectrum) {
        const json config{{"subcommand", "spectrum"}, {"mu", sp_mu},   {"cutoff", sp_cutoff},
                          {"tol", sp_tol},            {"null_band", sp_band}, {"out", sp_out}};
        NumericSpectrumOptions opts;
        opts.cutoff = sp_cutoff;
        opts.tol = sp_tol;
        opts.null_band = sp_band;
        const SpectrumReport rep = numeric_spectrum(sp_mu, opts);

        std::string csv = "q,rank,lambda_numeric,lambda_analytic,abs_err,multiplicity\n";
        for (const auto& row : rep.rows) {
            csv += std::to_string(row.q) + "," + std::to_string(row.rank) + "," +
                   fmt_double(row.lambda_numeric) + "," + fmt_double(row.lambda_analytic) + "," +
                   fmt_double(row.abs_err) + "," + std::to_string(row.multiplicity) + "\n";
        }
        write_file(sp_out, csv);
        json jrep{{"mu", rep.mu},
                  {"ind_u_numeric", rep.ind_u_numeric},
                  {"nullity_numeric", rep.nullity_numeric},
                  {"rows", rep.rows.size()},
                  {"config", config}};
        write_file(sp_out + ".json", dump(jrep));
        out << "spectrum: " << rep.rows.size() << " rows -> " << sp_out << "\n";
        return 0;
    }

    if (*index) {
        const json config{{"subcommand", "index"}, {"example", ix_example}, {"mu", ix_mu},
                          {"k", ix_k},             {"n", ix_n},             {"m", ix_m},
                          {"addendum", ix_addendum}};
        CatalogQuery q;
        q.name = ix_example;
        q.mu = ix_mu;
        q.k = ix_k;
        q.n = ix_n;
        q.m = ix_m;
        q.addendum_mode = ix_addendum;
        const IndexReport r = catalog_lookup(q);
        const std::string text = dump(report_json(r, config));
        if (ix_out.empty())
            out << text;
        else
            write_file(ix_out, text);
        return 0;
    }

    if (*horizon) {
        if (hz_mesh.empty()) throw std::invalid_argument("horizon: --mesh is required");
        if (hz_ends.empty()) hz_ends = hz_mesh.substr(0, hz_mesh.rfind(".obj")) + ".ends.json";
        const json config{{"subcommand", "horizon"}, {"mesh", hz_mesh}, {"ends", hz_ends},
                          {"field", hz_field},       {"tol", hz_tol},   {"out", hz_out}};
        SurfaceMesh mesh = read_obj(hz_mesh);
        load_sidecar(mesh, hz_ends);
        KillingField field;
        if (hz_field == "rotation")
            field.kind = KillingKind::rotation_x3;
        else if (hz_field == "dilation")
            field.kind = KillingKind::dilation_origin;
        else if (hz_field == "translation")
            field.kind = KillingKind::generic_translation;
        else
            throw std::invalid_argument("horizon: --field must be rotation|dilation|translation");
        const HorizonResult hr = vision_numbers(mesh, field, hz_tol);

        json comps = json::array();
        for (const auto& c : hr.components)
            comps.push_back({{"faces", c.face_count},
                             {"sign", c.sign},
                             {"touches_ends", c.touches_ends},
                             {"counted_in_adjusted", c.counted_in_adjusted}});
        json j{{"v", hr.v},
               {"degenerate", hr.degenerate},
               {"tol_used", hr.tol_used},
               {"max_abs_u", hr.max_abs_u},
               {"components", comps},
               {"config", config}};
        if (hr.v_adj)
            j["v_adj"] = *hr.v_adj;
        else
            j["v_adj"] = "unknown";
        write_file(hz_out + ".json", dump(j));

        // highlighted copy: horizon faces in their own group
        std::ostringstream os;
        os << "# " << config.dump() << "\n";
        for (const auto& v : mesh.vertices)
            os << "v " << fmt_double(v[0]) << " " << fmt_double(v[1]) << " " << fmt_double(v[2])
               << "\n";
        os << "g visible\n";
        for (size_t f = 0; f < mesh.faces.size(); ++f)
            if (hr.face_sign[f] != 0)
                os << "f " << mesh.faces[f][0] + 1 << " " << mesh.faces[f][1] + 1 << " "
                   << mesh.faces[f][2] + 1 << "\n";
        os << "g horizon\n";
        for (size_t f = 0; f < mesh.faces.size(); ++f)
            if (hr.face_sign[f] == 0)
                os << "f " << mesh.faces[f][0] + 1 << " " << mesh.faces[f][1] + 1 << " "
                   << mesh.faces[f][2] + 1 << "\n";
        write_file(hz_out + ".obj", os.str());
        out << "horizon: v = " << hr.v << " -> " << hz_out << ".json\n";
        return 0;
    }

    if (*ends_cmd) {
        const json config{
            {"subcommand", "ends"}, {"mu", en_mu}, {"nu", en_nu}, {"q2", en_q2}};
        const EndData e = classify_end(en_mu, en_nu, Cplx(en_q2, 0.0));
        json j{{"mu", e.mu},
               {"nu", e.nu},
               {"q2", e.q_minus2.real()},
               {"ord_Q", e.ord_Q},
               {"type", e.type == EndType::catenoid_cousin_type ? "catenoid-cousin" : "horosphere"},
               {"m1", e.m1},
               {"m2", e.m2},
               {"m", e.m},
               {"embedded", e.embedded},
               {"correction_exponent", e.correction_exponent},
               {"config", config}};
        if (e.type == EndType::catenoid_cousin_type) {
            j["graph_constants"] = {{"c1", e.c1}, {"c2", e.c2}, {"c3", e.c3}};
        }
        const std::string text = dump(j);
        if (en_out.empty())
            out << text;
        else
            write_file(en_out, text);
        return 0;
    }

    if (*mono) {
        const json config{{"subcommand", "monodromy"}, {"example", mn_example}, {"mu", mn_mu},
                          {"radius", mn_radius},       {"samples", mn_samples}};
        const CatalogSurface cs = catalog_by_name(mn_example, mn_mu);
        const Cplx center(mn_center_re, mn_center_im);
        const Path loop = make_circle(center, mn_radius, mn_samples);
        MonodromyResult mr;
        if (cs.data) {
            mr = monodromy(*cs.data, loop);
        } else {
            mr = monodromy_from_generator(generator_from_dual(cs.dual->G, cs.dual->omega), loop);
        }
        json j{{"B",
                {{"b11", {mr.B.a.real(), mr.B.a.imag()}},
                 {"b12", {mr.B.b.real(), mr.B.b.imag()}},
                 {"b21", {mr.B.c.real(), mr.B.c.imag()}},
                 {"b22", {mr.B.d.real(), mr.B.d.imag()}}}},
               {"in_su2", mr.in_su2},
               {"defect", mr.defect},
               {"det_defect", mr.det_defect},
               {"config", config}};
        const std::string text = dump(j);
        if (mn_out.empty())
            out << text;
        else
            write_file(mn_out, text);
        return 0;
    }

    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        err << "error: E_USAGE: " << e.what() << "\n";
        return 2;
    } catch (const tolerance_error& e) {
        err << "error: E_TOLERANCE: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        err << "error: E_DOMAIN: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: E_PRECONDITION: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: E_IO: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace cmc1::cli
