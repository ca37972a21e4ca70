from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="RSAT_")

    project_name: str = "rainbowsat"
    debug: bool = False
    log_level: str = Field(
        default="WARNING",
        description="Log level applied by the CLI when --verbose is not given",
    )

    # Workload settings
    jobs: int = Field(
        default=1,
        ge=1,
        description="Default worker count for --jobs (RSAT_JOBS)",
    )
    vertex_cap: int = Field(
        default=32,
        ge=1,
        le=64,
        description="Operational vertex cap for verifier workloads",
    )
    max_coloring_edges: int = Field(
        default=12,
        ge=0,
        description="Largest edge count for which every set partition of E(G) is enumerated",
    )
    search_max_n_all_colorings: int = Field(
        default=7,
        description="Largest n accepted by all_colorings searches",
    )
    search_max_n_rainbow: int = Field(
        default=10,
        description="Largest n accepted by rainbow_only searches",
    )

    # CLI settings
    cli_output_format: Literal["table", "json"] = Field(
        default="table",
        description="Default output format for CLI commands",
    )
    random_seed: int = Field(
        default=20240607,
        description="Seed for randomized harnesses, echoed in reports",
    )
