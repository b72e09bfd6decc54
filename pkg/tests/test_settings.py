from config.settings import VALID_LOG_LEVELS, Settings
from utils.logger import LogManager, parse_rotation_size


def test_defaults(regcheck_home):
    settings = Settings(regcheck_home)
    assert settings.default_characteristic == 0
    assert settings.default_order == "grevlex"
    assert settings.surface_characteristic == 101
    assert settings.suite_jobs == 1
    assert settings.log_dir == regcheck_home / "logs"
    assert settings.log_dir.is_dir()
    assert settings.validate() == []


def test_env_values_are_read(regcheck_home, monkeypatch):
    monkeypatch.setenv("DEFAULT_CHARACTERISTIC", "101")
    monkeypatch.setenv("DEFAULT_ORDER", "lex")
    monkeypatch.setenv("SUITE_JOBS", "4")
    monkeypatch.setenv("INCLUDE_SLOW", "yes")
    settings = Settings(regcheck_home)
    assert settings.default_characteristic == 101
    assert settings.default_order == "lex"
    assert settings.suite_jobs == 4
    assert settings.include_slow is True


def test_validation_collects_every_error(regcheck_home, monkeypatch):
    monkeypatch.setenv("DEFAULT_CHARACTERISTIC", "4")
    monkeypatch.setenv("DEFAULT_ORDER", "revlex")
    monkeypatch.setenv("SUITE_JOBS", "0")
    monkeypatch.setenv("LOG_LEVEL", "LOUD")
    monkeypatch.setenv("LOG_ROTATION_SIZE", "10X")
    errors = Settings(regcheck_home).validate()
    assert len(errors) == 5
    assert any("DEFAULT_CHARACTERISTIC" in e for e in errors)


def test_save_writes_env_file(regcheck_home, monkeypatch):
    # save recarga el .env con override; monkeypatch deshace esos cambios
    monkeypatch.setenv("SUITE_JOBS", "1")
    monkeypatch.setenv("PROGRESS", "true")
    settings = Settings(regcheck_home)
    settings.save({"SUITE_JOBS": 3, "PROGRESS": False})
    text = (regcheck_home / ".env").read_text(encoding="utf-8")
    assert "SUITE_JOBS=3" in text
    assert "PROGRESS=false" in text
    settings.save({"SUITE_JOBS": 2})
    text = (regcheck_home / ".env").read_text(encoding="utf-8")
    assert "SUITE_JOBS=2" in text
    assert "SUITE_JOBS=3" not in text


def test_rotation_size_parsing():
    assert parse_rotation_size("10M") == 10 * 1024
    assert parse_rotation_size("512k") == 512
    assert parse_rotation_size("junk") == 10 * 1024


def test_log_manager_components(regcheck_home):
    manager = LogManager(Settings(regcheck_home), "DEBUG")
    assert set(manager.loggers) == {"main", "groebner", "ideals", "homology", "suites"}
    assert manager.get("unknown") is manager.get("main")
    manager.set_level("WARNING")
    assert "WARNING" in VALID_LOG_LEVELS
