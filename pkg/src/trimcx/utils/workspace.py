"""ワークスペース管理ユーティリティ

環境変数TRIMCX_WORKSPACEで出力・設定ファイルの基準ディレクトリを指定可能。
未設定の場合はカレントディレクトリを返す。
"""

import os
from pathlib import Path

WORKSPACE_ENV = "TRIMCX_WORKSPACE"


def get_workspace() -> Path:
    """ワークスペースディレクトリを取得する

    Returns:
        ワークスペースディレクトリのPathオブジェクト

    Raises:
        ValueError: 指定されたパスが存在しないディレクトリの場合

    Example:
        $ export TRIMCX_WORKSPACE=/path/to/runs
        >>> get_workspace()
        PosixPath('/path/to/runs')
    """
    workspace_env = os.environ.get(WORKSPACE_ENV)

    if workspace_env is not None:
        workspace = Path(workspace_env)
        if not workspace.is_dir():
            raise ValueError(f"{WORKSPACE_ENV}で指定されたパスが存在しないか、ディレクトリではありません: {workspace}")
        return workspace

    return Path.cwd()
