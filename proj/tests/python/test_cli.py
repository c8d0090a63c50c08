import subprocess


def run(cli_path, data_dir, *args, **kw):
    cmd = [cli_path, "--data", data_dir, *args]
    return subprocess.run(cmd, capture_output=True, text=True, timeout=300, **kw)


def test_rsum_pin(cli_path, data_dir):
    p = run(cli_path, data_dir, "rsum", "--N", "10")
    assert p.returncode == 0
    assert "sum_R2(10) = 24.6977692937" in p.stdout


def test_zerosum(cli_path, data_dir):
    p = run(cli_path, data_dir, "zerosum", "--x", "1000")
    assert p.returncode == 0
    assert "value = 305.4939" in p.stdout
    assert "zeros_used = 100000" in p.stdout


def test_verify_thm1_deterministic(cli_path, data_dir):
    a = run(cli_path, data_dir, "verify", "thm1", "--N", "1000,2000")
    b = run(cli_path, data_dir, "verify", "thm1", "--N", "1000,2000")
    assert a.returncode == 0
    assert a.stdout.startswith("# experiment = theorem1")
    assert "-> PASS" in a.stderr
    assert a.stdout == b.stdout


def test_constants_override_can_fail_gate(cli_path, data_dir, tmp_path):
    cfg = tmp_path / "strict.cfg"
    cfg.write_text("thm1_normalized_max = 1e-12\n")
    p = run(cli_path, data_dir, "--constants", str(cfg), "verify", "thm1", "--N", "1000")
    assert p.returncode == 2
    assert "-> FAIL" in p.stderr


def test_out_writes_report(cli_path, data_dir, tmp_path):
    out = tmp_path / "report.csv"
    p = run(cli_path, data_dir, "--out", str(out), "verify", "thm2", "--N", "1000", "--y", "10,100")
    assert p.returncode == 0
    text = out.read_text()
    assert text.startswith("# experiment = theorem2")
    assert "# timestamp = unset" in text


def test_lemma_i2(cli_path, data_dir):
    p = run(cli_path, data_dir, "lemma", "i2", "--y", "5", "--N", "10")
    assert p.returncode == 0
    assert "-> PASS" in p.stderr


def test_remark(cli_path, data_dir):
    p = run(cli_path, data_dir, "remark", "--N", "1000000", "--y", "1000")
    assert p.returncode == 0
    assert "-> PASS" in p.stderr


def test_sieve_cache_reuse(cli_path, data_dir, tmp_path):
    cache = tmp_path / "lambda.bin"
    first = run(cli_path, data_dir, "sieve", "--n-max", "5000", "--cache", str(cache))
    assert first.returncode == 0
    assert "cached to" in first.stderr
    second = run(cli_path, data_dir, "sieve", "--n-max", "5000", "--cache", str(cache))
    assert second.returncode == 0
    assert "reusing cache" in second.stderr


def test_bad_subcommand(cli_path, data_dir):
    p = run(cli_path, data_dir, "frobnicate")
    assert p.returncode != 0


def test_help(cli_path, data_dir):
    p = run(cli_path, data_dir, "--help")
    assert p.returncode == 0
    assert "verify" in p.stdout
