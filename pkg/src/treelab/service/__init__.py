from treelab.service.app import create_app, serve
from treelab.service.workspace import UnknownRunError, Workspace, WorkspaceError

__all__ = ["create_app", "serve", "Workspace", "WorkspaceError", "UnknownRunError"]
