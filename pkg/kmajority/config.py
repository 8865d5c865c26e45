"""Runtime settings loaded from config.yaml and the environment."""

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from kmajority.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = 'KMAJORITY_CONFIG'
MEMO_ENV_VAR = 'KMAJORITY_ORACLE_MEMO'


class Settings(BaseModel):
  """Tunable limits for the exhaustive routines."""

  oracle_limit: int = Field(30, ge=1)
  bipartite_oracle_limit: int = Field(16, ge=1)
  recursion_base: int = Field(24, ge=1)
  enumeration_budget: int = Field(100_000, ge=1)
  pair_count_budget: int = Field(518_400, ge=1)
  pattern_side_limit: int = Field(12, ge=1)
  realizer_node_budget: int = Field(2_000_000, ge=1)
  memo_limit: int = Field(1_000_000, ge=0)
  workers: int = Field(1, ge=1)


def load_env_files() -> None:
  """Load .env and .env.local from the working directory if they exist."""
  for filepath in ('.env', '.env.local'):
    if Path(filepath).exists():
      load_dotenv(filepath, override=False)


def load_config(path: str | None = None) -> dict[str, Any]:
  """Load the raw YAML mapping; a missing file yields an empty mapping."""
  config_path = Path(path or os.environ.get(CONFIG_ENV_VAR, 'config.yaml'))
  if not config_path.exists():
    logger.debug('no config file at %s, using defaults', config_path)
    return {}
  with open(config_path, 'r') as f:
    data = yaml.safe_load(f) or {}
  if not isinstance(data, dict):
    raise InvalidArgumentError(f'{config_path} must contain a mapping')
  return data


@lru_cache(maxsize=1)
def get_settings() -> Settings:
  """Settings from config.yaml with environment overrides applied."""
  load_env_files()
  raw = load_config()
  memo = os.environ.get(MEMO_ENV_VAR)
  if memo:
    raw['memo_limit'] = memo
  try:
    return Settings(**raw)
  except ValidationError as e:
    raise InvalidArgumentError(f'invalid configuration: {e}') from e


def reset_settings() -> None:
  """Forget cached settings so the next call reloads them."""
  get_settings.cache_clear()
